#include "lomax/simulation.hpp"

#include "lomax/distribution.hpp"
#include "lomax/emse.hpp"
#include "lomax/random.hpp"
#include "lomax/summation.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace lomax {

namespace {

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::domain_error(std::string("simulation ") + name + " must be finite and positive");
}

unsigned resolve_threads(unsigned threads, std::size_t work)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(work, 1)));
}

struct MeanAndError {
    double mean;
    double stderr_;
};

template <class Get>
MeanAndError summarize(const std::vector<ReplicateValues>& vals, Get get)
{
    const double count = static_cast<double>(vals.size());
    CompensatedSum sum;
    for (const auto& v : vals)
        sum.add(get(v));
    const double mean = sum.value() / count;
    if (vals.size() < 2)
        return {mean, 0.0};
    CompensatedSum ss;
    for (const auto& v : vals) {
        const double d = get(v) - mean;
        ss.add(d * d);
    }
    const double var = ss.value() / (count - 1.0);
    return {mean, std::sqrt(var / count)};
}

} // namespace

void SimConfig::validate() const
{
    require_positive(alpha_true, "alpha");
    require_positive(lambda, "lambda");
    require_positive(c, "c");
    if (n < 1)
        throw std::domain_error("simulation sample size n must be >= 1");
    if (reps < 1)
        throw std::domain_error("simulation replicate count must be >= 1");
}

ReplicateValues run_replicate(const SimConfig& config, std::size_t rep)
{
    const LomaxParams model(config.alpha_true, config.lambda);
    const HyperBound bound(config.c);
    Xoshiro256 rng = replicate_stream(config.seed, rep);

    CompensatedSum t;
    for (std::size_t i = 0; i < config.n; ++i) {
        const double x = sample_inverse(model, rng.uniform01());
        t.add(std::log1p(x / config.lambda));
    }

    ReplicateValues out;
    out.t_stat = t.value();
    assert(out.t_stat > 0.0);
    for (LossKind loss : kAllLosses) {
        out.eb[loss] = ebayes(loss, bound, config.n, out.t_stat);
        out.emse[loss] = emse(loss, bound, config.n, out.t_stat);
    }
    assert(out.eb.el < out.eb.kl && out.eb.kl < out.eb.sel);
    assert(out.emse.sel < out.emse.kl && out.emse.kl < out.emse.el);
    return out;
}

SimCellResult run_cell(const SimConfig& config, unsigned threads)
{
    config.validate();
    std::vector<ReplicateValues> vals(config.reps);

    const unsigned workers = resolve_threads(threads, config.reps);
    constexpr std::size_t kChunk = 256;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= config.reps)
                return;
            const std::size_t end = std::min(begin + kChunk, config.reps);
            for (std::size_t r = begin; r < end; ++r)
                vals[r] = run_replicate(config, r);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(work);
    }

    SimCellResult result;
    result.config = config;
    for (LossKind loss : kAllLosses) {
        const auto eb = summarize(vals, [loss](const ReplicateValues& v) { return v.eb[loss]; });
        const auto mse = summarize(vals, [loss](const ReplicateValues& v) { return v.emse[loss]; });
        result.eb_mean[loss] = eb.mean;
        result.eb_stderr[loss] = eb.stderr_;
        result.emse_mean[loss] = mse.mean;
        result.emse_stderr[loss] = mse.stderr_;
    }
    return result;
}

std::vector<SimCellResult> run_table(double alpha_true, double lambda, std::span<const double> c_values,
                                     std::span<const std::size_t> n_values, std::size_t reps,
                                     std::uint64_t seed, unsigned threads)
{
    if (c_values.empty() || n_values.empty())
        throw std::domain_error("simulation grids for c and n must be nonempty");
    std::vector<SimCellResult> cells;
    cells.reserve(c_values.size() * n_values.size());
    std::uint64_t index = 0;
    for (double c : c_values) {
        for (std::size_t n : n_values) {
            SimConfig cfg{alpha_true, lambda, c, n, reps, derive_seed(seed, index++)};
            cells.push_back(run_cell(cfg, threads));
        }
    }
    return cells;
}

} // namespace lomax
