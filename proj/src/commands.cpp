#include "lomax/commands.hpp"

#include "lomax/distribution.hpp"
#include "lomax/emse.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>

namespace lomax::cli {

namespace {

std::string fixed5(double x)
{
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.5f", x);
    return buf.data();
}

nlohmann::json per_loss_json(const PerLoss& v)
{
    return {{"sel", v.sel}, {"kl", v.kl}, {"el", v.el}};
}

} // namespace

nlohmann::json RunManifest::to_json() const
{
    nlohmann::json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["tool_version"] = tool_version;
    j["timestamp"] = timestamp;
    return j;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

std::string format_shortest(double x)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

void require_positive(double v, const std::string& flag)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw UsageError(flag + " must be a finite number > 0 (got " + format_shortest(v) + ")");
}

void require_positive_all(std::span<const double> vs, const std::string& flag)
{
    if (vs.empty())
        throw UsageError(flag + " needs at least one value");
    for (double v : vs)
        require_positive(v, flag);
}

// estimate ------------------------------------------------------------------

std::vector<EstimateReport> cmd_estimate(const Dataset& data, double lambda, std::span<const double> c_values)
{
    require_positive(lambda, "--lambda");
    require_positive_all(c_values, "--c");
    const Sample sample(data.values, lambda);
    std::vector<EstimateReport> reports;
    reports.reserve(c_values.size());
    for (double c : c_values)
        reports.push_back(make_report(sample.size(), sample.t_stat(), HyperBound(c)));
    return reports;
}

void write_estimate_csv(std::ostream& out, std::span<const EstimateReport> reports)
{
    out << "n,c,eb_sel,eb_kl,eb_el,emse_sel,emse_kl,emse_el\n";
    for (const auto& r : reports) {
        out << r.n << ',' << format_shortest(r.c);
        for (LossKind loss : kAllLosses)
            out << ',' << fixed5(r.eb[loss]);
        for (LossKind loss : kAllLosses)
            out << ',' << fixed5(r.emse[loss]);
        out << '\n';
    }
}

nlohmann::json estimate_json(std::span<const EstimateReport> reports)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : reports) {
        rows.push_back({{"n", r.n},
                        {"c", r.c},
                        {"t_stat", r.t_stat},
                        {"mle", r.mle},
                        {"eb", per_loss_json(r.eb)},
                        {"emse", per_loss_json(r.emse)}});
    }
    return rows;
}

// simulate ------------------------------------------------------------------

std::vector<SimulationTable> cmd_simulate(const SimulateOptions& o)
{
    require_positive_all(o.alphas, "--alpha");
    require_positive_all(o.lambdas, "--lambda");
    require_positive_all(o.c_values, "--c");
    if (o.n_values.empty())
        throw UsageError("--n needs at least one value");
    for (std::size_t n : o.n_values)
        if (n < 1)
            throw UsageError("--n must be >= 1 (got 0)");
    if (o.reps < 1)
        throw UsageError("--reps must be >= 1 (got 0)");

    std::vector<SimulationTable> tables;
    for (double alpha : o.alphas)
        for (double lambda : o.lambdas)
            tables.push_back(
                {alpha, lambda, run_table(alpha, lambda, o.c_values, o.n_values, o.reps, o.seed, o.threads)});
    return tables;
}

void write_simulation_csv(std::ostream& out, const SimulationTable& table)
{
    out << "n,c,eb_sel,eb_kl,eb_el,emse_sel,emse_kl,emse_el,"
           "stderr_eb_sel,stderr_eb_kl,stderr_eb_el,stderr_emse_sel,stderr_emse_kl,stderr_emse_el\n";
    for (const auto& cell : table.cells) {
        out << cell.config.n << ',' << format_shortest(cell.config.c);
        for (const PerLoss* v : {&cell.eb_mean, &cell.emse_mean, &cell.eb_stderr, &cell.emse_stderr})
            for (LossKind loss : kAllLosses)
                out << ',' << fixed5((*v)[loss]);
        out << '\n';
    }
}

nlohmann::json simulation_json(const SimulationTable& table)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : table.cells) {
        cells.push_back({{"n", cell.config.n},
                         {"c", cell.config.c},
                         {"reps", cell.config.reps},
                         {"cell_seed", cell.config.seed},
                         {"eb_mean", per_loss_json(cell.eb_mean)},
                         {"emse_mean", per_loss_json(cell.emse_mean)},
                         {"eb_stderr", per_loss_json(cell.eb_stderr)},
                         {"emse_stderr", per_loss_json(cell.emse_stderr)}});
    }
    return {{"alpha", table.alpha}, {"lambda", table.lambda}, {"cells", cells}};
}

std::string simulation_file_stem(const SimulationTable& table)
{
    return "simulate_alpha" + format_shortest(table.alpha) + "_lambda" + format_shortest(table.lambda);
}

// gof -----------------------------------------------------------------------

KsResult cmd_gof(const Dataset& data, double lambda, std::optional<double> alpha, FitMethod fit)
{
    require_positive(lambda, "--lambda");
    double shape = 0.0;
    if (alpha) {
        require_positive(*alpha, "--alpha");
        shape = *alpha;
    } else if (fit == FitMethod::Mle) {
        const Sample sample(data.values, lambda);
        shape = mle(sample.size(), sample.t_stat());
    } else {
        shape = fit_min_ks_alpha(data.values, lambda);
    }
    return ks_test(data.values, LomaxParams(shape, lambda));
}

void write_gof_text(std::ostream& out, const KsResult& r, const std::string& fit_label)
{
    out << "n        " << r.n << '\n'
        << "lambda   " << format_shortest(r.fitted.lambda()) << '\n'
        << "alpha    " << format_shortest(r.fitted.alpha()) << " (" << fit_label << ")\n"
        << "D        " << fixed5(r.d_stat) << '\n'
        << "p-value  " << fixed5(r.p_value) << '\n';
    if (r.p_value >= 0.05)
        out << "Lomax fit not rejected at level 0.05\n";
    else
        out << "Lomax fit rejected at level 0.05\n";
}

nlohmann::json gof_json(const KsResult& r, const std::string& fit_label)
{
    return {{"n", r.n},
            {"lambda", r.fitted.lambda()},
            {"alpha", r.fitted.alpha()},
            {"fit", fit_label},
            {"d_stat", r.d_stat},
            {"p_value", r.p_value},
            {"reject_at_0_05", r.p_value < 0.05}};
}

// plot-data -----------------------------------------------------------------

PlotKind parse_plot_kind(const std::string& s)
{
    if (s == "pdf-family")
        return PlotKind::PdfFamily;
    if (s == "c-sweep-estimates")
        return PlotKind::CSweepEstimates;
    if (s == "c-sweep-emse")
        return PlotKind::CSweepEmse;
    throw UsageError("unknown plot kind '" + s + "' (expected pdf-family, c-sweep-estimates or c-sweep-emse)");
}

std::vector<double> make_grid(double lo, double hi, double step)
{
    require_positive(step, "grid step");
    if (!(hi >= lo))
        throw UsageError("grid upper end must be >= lower end");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k)
        grid[k] = lo + static_cast<double>(k) * step;
    return grid;
}

std::vector<SeriesPoint> pdf_family(const PdfFamilyOptions& o)
{
    require_positive_all(o.alphas, "--alpha");
    require_positive_all(o.lambdas, "--lambda");
    require_positive(o.x_max, "--x-max");
    const auto xs = make_grid(0.0, o.x_max, o.x_step);
    std::vector<SeriesPoint> points;
    for (double alpha : o.alphas)
        for (double lambda : o.lambdas) {
            const LomaxParams p(alpha, lambda);
            const std::string label = "alpha=" + format_shortest(alpha) + ";lambda=" + format_shortest(lambda);
            for (double x : xs)
                points.push_back({label, x, pdf(p, x)});
        }
    return points;
}

std::vector<SeriesPoint> c_sweep(const Dataset& data, const CSweepOptions& o, PlotKind kind)
{
    if (kind == PlotKind::PdfFamily)
        throw UsageError("c_sweep needs a c-sweep plot kind");
    require_positive(o.lambda, "--lambda");
    require_positive(o.c_min, "--c-min");
    const auto cs = make_grid(o.c_min, o.c_max, o.c_step);
    const Sample sample(data.values, o.lambda);
    std::vector<SeriesPoint> points;
    for (LossKind loss : kAllLosses)
        for (double c : cs) {
            const HyperBound bound(c);
            const double y = kind == PlotKind::CSweepEstimates ? ebayes(loss, bound, sample.size(), sample.t_stat())
                                                               : emse(loss, bound, sample.size(), sample.t_stat());
            points.push_back({std::string(to_string(loss)), c, y});
        }
    return points;
}

void write_series_csv(std::ostream& out, std::span<const SeriesPoint> points)
{
    out << "series,x,y\n";
    for (const auto& p : points)
        out << p.series << ',' << format_shortest(p.x) << ',' << format_shortest(p.y) << '\n';
}

} // namespace lomax::cli
