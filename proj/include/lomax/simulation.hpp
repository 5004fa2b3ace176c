#pragma once

#include "lomax/estimators.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lomax {

/// One simulation cell: true model, hyperprior bound, sample size and replicates.
struct SimConfig {
    double alpha_true = 0.0;
    double lambda = 0.0;
    double c = 0.0;
    std::size_t n = 0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;

    /// Throws std::domain_error naming the first invalid field.
    void validate() const;
};

struct SimCellResult {
    SimConfig config;
    PerLoss eb_mean;
    PerLoss emse_mean;
    PerLoss eb_stderr;
    PerLoss emse_stderr;
};

/// Per-replicate values, in replicate order.
struct ReplicateValues {
    double t_stat = 0.0;
    PerLoss eb;
    PerLoss emse;
};

/// Draws replicate `rep` of `config` and evaluates all estimators on it.
ReplicateValues run_replicate(const SimConfig& config, std::size_t rep);

/// `threads == 0` uses the hardware concurrency. The result does not depend
/// on the thread count.
SimCellResult run_cell(const SimConfig& config, unsigned threads = 0);

/// Cells in row-major order: c outer, n inner. Cell k is seeded with
/// derive_seed(seed, k).
std::vector<SimCellResult> run_table(double alpha_true, double lambda, std::span<const double> c_values,
                                     std::span<const std::size_t> n_values, std::size_t reps,
                                     std::uint64_t seed, unsigned threads = 0);

} // namespace lomax
