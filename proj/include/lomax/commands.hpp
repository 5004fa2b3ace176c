#pragma once

#include "lomax/dataset.hpp"
#include "lomax/estimators.hpp"
#include "lomax/gof.hpp"
#include "lomax/simulation.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lomax::cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit statuses.
enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kDomain = 4 };

/// Invalid command-line input (exit status 2).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class Format { Csv, Json };

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::optional<std::uint64_t> seed;
    std::string tool_version = kToolVersion;
    std::string timestamp;  ///< ISO-8601 UTC

    nlohmann::json to_json() const;
};

std::string utc_timestamp();

/// Shortest round-trip text for a double.
std::string format_shortest(double x);

// estimate ------------------------------------------------------------------

std::vector<EstimateReport> cmd_estimate(const Dataset& data, double lambda, std::span<const double> c_values);

/// Header n,c,eb_sel,eb_kl,eb_el,emse_sel,emse_kl,emse_el; 5 decimals.
void write_estimate_csv(std::ostream& out, std::span<const EstimateReport> reports);
nlohmann::json estimate_json(std::span<const EstimateReport> reports);

// simulate ------------------------------------------------------------------

struct SimulateOptions {
    std::vector<double> alphas;
    std::vector<double> lambdas;
    std::vector<double> c_values{0.5, 1.0, 1.5};
    std::vector<std::size_t> n_values{20, 40, 60, 80, 100};
    std::size_t reps = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

struct SimulationTable {
    double alpha = 0.0;
    double lambda = 0.0;
    std::vector<SimCellResult> cells;
};

/// One table per (alpha, lambda) pair, alpha outer. Every table uses `seed`.
std::vector<SimulationTable> cmd_simulate(const SimulateOptions& options);

/// Estimate columns followed by stderr_eb_* and stderr_emse_*.
void write_simulation_csv(std::ostream& out, const SimulationTable& table);
nlohmann::json simulation_json(const SimulationTable& table);
std::string simulation_file_stem(const SimulationTable& table);

// gof -----------------------------------------------------------------------

enum class FitMethod { Mle, MinKs };

KsResult cmd_gof(const Dataset& data, double lambda, std::optional<double> alpha, FitMethod fit);

/// Human-readable report with the decision at the 0.05 level.
void write_gof_text(std::ostream& out, const KsResult& result, const std::string& fit_label);
nlohmann::json gof_json(const KsResult& result, const std::string& fit_label);

// plot-data -----------------------------------------------------------------

enum class PlotKind { PdfFamily, CSweepEstimates, CSweepEmse };

PlotKind parse_plot_kind(const std::string& s);

struct SeriesPoint {
    std::string series;
    double x;
    double y;
};

struct PdfFamilyOptions {
    std::vector<double> alphas{8.0, 10.0, 12.0};
    std::vector<double> lambdas{1.0};
    double x_max = 2.0;
    double x_step = 0.01;
};

struct CSweepOptions {
    double lambda = 3.0;
    double c_min = 0.25;
    double c_max = 1.25;
    double c_step = 0.25;
};

/// Evenly spaced grid lo, lo + step, ... up to hi inclusive (index based, no drift).
std::vector<double> make_grid(double lo, double hi, double step);

std::vector<SeriesPoint> pdf_family(const PdfFamilyOptions& options);
std::vector<SeriesPoint> c_sweep(const Dataset& data, const CSweepOptions& options, PlotKind kind);

/// Header series,x,y; full precision.
void write_series_csv(std::ostream& out, std::span<const SeriesPoint> points);

// validation helpers shared with the executable ------------------------------

void require_positive(double v, const std::string& flag);
void require_positive_all(std::span<const double> vs, const std::string& flag);

} // namespace lomax::cli
