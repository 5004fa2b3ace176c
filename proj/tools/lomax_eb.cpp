// lomax-eb: E-Bayesian estimation for the Lomax shape parameter.

#include "lomax/commands.hpp"
#include "lomax/dataset.hpp"
#include "lomax/distribution.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace lomax;
using namespace lomax::cli;

namespace {

struct DataFlags {
    std::string path;
    bool embedded = false;

    Dataset load() const
    {
        if (!path.empty())
            return read_dataset(path);
        return embedded_dataset();
    }

    void add_to(CLI::App* cmd)
    {
        auto* data = cmd->add_option("--data", path, "Data file: one positive observation per line, '#' comments");
        auto* emb = cmd->add_flag("--embedded", embedded, "Use the built-in 21-point mobility dataset (default)");
        data->excludes(emb);
    }

    void record(RunManifest& m) const { m.parameters["data"] = path.empty() ? "embedded" : path; }
};

Format parse_format(const std::string& s)
{
    if (s == "csv")
        return Format::Csv;
    if (s == "json")
        return Format::Json;
    throw UsageError("--format must be csv or json (got '" + s + "')");
}

std::string join(const std::vector<double>& xs)
{
    std::string s;
    for (double x : xs)
        s += (s.empty() ? "" : ",") + format_shortest(x);
    return s;
}

std::ofstream open_out(const fs::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    return out;
}

/// Writes `body` to `out_path` (or stdout) and the manifest next to it.
void emit(const std::string& body, const std::string& out_path, const RunManifest& manifest)
{
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    open_out(out_path) << body;
    open_out(out_path + ".manifest.json") << manifest.to_json().dump(2) << '\n';
}

std::string dump_json(nlohmann::json results, const RunManifest& manifest)
{
    nlohmann::json doc;
    doc["manifest"] = manifest.to_json();
    doc["results"] = std::move(results);
    return doc.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"E-Bayesian and maximum-likelihood estimation of the Lomax shape parameter"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;

    // estimate
    auto* est = app.add_subcommand("estimate", "MLE, E-Bayes estimates and E-MSE for a dataset");
    DataFlags est_data;
    est_data.add_to(est);
    double est_lambda = 3.0;
    std::vector<double> est_c;
    est->add_option("--lambda", est_lambda, "Known scale parameter")->capture_default_str();
    est->add_option("--c", est_c, "Hyperprior bound c (repeatable)")->required()->take_all()->allow_extra_args(false);
    est->add_option("--format", format, "csv or json")->capture_default_str();
    est->add_option("--out", out_path, "Output file (default stdout)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo over a (c, n) grid");
    SimulateOptions sim_opts;
    sim->add_option("--alpha", sim_opts.alphas, "True shape (repeatable)")->required();
    sim->add_option("--lambda", sim_opts.lambdas, "Known scale (repeatable)")->required();
    sim->add_option("--c", sim_opts.c_values, "Hyperprior bounds (repeatable)")->capture_default_str();
    sim->add_option("--n", sim_opts.n_values, "Sample sizes (repeatable)")->capture_default_str();
    sim->add_option("--reps", sim_opts.reps, "Replicates per cell")->capture_default_str();
    sim->add_option("--seed", sim_opts.seed, "RNG seed")->capture_default_str();
    sim->add_option("--threads", sim_opts.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sim->add_option("--format", format, "csv or json")->capture_default_str();
    sim->add_option("--out", out_path, "Output directory (default stdout)");

    // gof
    auto* gof = app.add_subcommand("gof", "Kolmogorov-Smirnov test of a Lomax fit");
    DataFlags gof_data;
    gof_data.add_to(gof);
    double gof_lambda = 3.0;
    std::optional<double> gof_alpha;
    std::string gof_fit = "mle";
    std::string gof_format = "text";
    gof->add_option("--lambda", gof_lambda, "Known scale parameter")->capture_default_str();
    gof->add_option("--alpha", gof_alpha, "Shape to test; fitted when omitted");
    gof->add_option("--fit", gof_fit, "Shape fit when --alpha is omitted: mle or min-ks")
        ->check(CLI::IsMember({"mle", "min-ks"}))
        ->capture_default_str();
    gof->add_option("--format", gof_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    gof->add_option("--out", out_path, "Output file (default stdout)");

    // plot-data
    auto* plot = app.add_subcommand("plot-data", "Emit x,y series for plotting");
    DataFlags plot_data;
    plot_data.add_to(plot);
    std::string plot_kind;
    PdfFamilyOptions pdf_opts;
    CSweepOptions sweep_opts;
    std::vector<double> plot_lambdas;
    plot->add_option("kind", plot_kind, "pdf-family, c-sweep-estimates or c-sweep-emse")->required();
    plot->add_option("--alpha", pdf_opts.alphas, "pdf-family shapes (repeatable)")->capture_default_str();
    plot->add_option("--lambda", plot_lambdas,
                     "pdf-family scales (repeatable, default 1); c-sweep scale (default 3)");
    plot->add_option("--x-max", pdf_opts.x_max, "pdf-family grid end")->capture_default_str();
    plot->add_option("--x-step", pdf_opts.x_step, "pdf-family grid step")->capture_default_str();
    plot->add_option("--c-min", sweep_opts.c_min, "c-sweep grid start")->capture_default_str();
    plot->add_option("--c-max", sweep_opts.c_max, "c-sweep grid end")->capture_default_str();
    plot->add_option("--c-step", sweep_opts.c_step, "c-sweep grid step")->capture_default_str();
    plot->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        RunManifest manifest;
        manifest.timestamp = utc_timestamp();

        if (*est) {
            const Format fmt = parse_format(format);
            const Dataset data = est_data.load();
            const auto reports = cmd_estimate(data, est_lambda, est_c);
            manifest.command = "estimate";
            est_data.record(manifest);
            manifest.parameters["lambda"] = format_shortest(est_lambda);
            manifest.parameters["c"] = join(est_c);
            manifest.parameters["n"] = std::to_string(reports.front().n);
            manifest.parameters["t_stat"] = format_shortest(reports.front().t_stat);
            manifest.parameters["mle"] = format_shortest(reports.front().mle);
            if (fmt == Format::Json) {
                emit(dump_json(estimate_json(reports), manifest), out_path, manifest);
            } else {
                std::ostringstream body;
                write_estimate_csv(body, reports);
                emit(body.str(), out_path, manifest);
                std::cerr << "# mle=" << format_shortest(reports.front().mle)
                          << " t_stat=" << format_shortest(reports.front().t_stat) << '\n';
            }
        } else if (*sim) {
            const Format fmt = parse_format(format);
            manifest.command = "simulate";
            manifest.seed = sim_opts.seed;
            manifest.parameters["alpha"] = join(sim_opts.alphas);
            manifest.parameters["lambda"] = join(sim_opts.lambdas);
            manifest.parameters["c"] = join(sim_opts.c_values);
            std::string ns;
            for (auto n : sim_opts.n_values)
                ns += (ns.empty() ? "" : ",") + std::to_string(n);
            manifest.parameters["n"] = ns;
            manifest.parameters["reps"] = std::to_string(sim_opts.reps);
            manifest.parameters["threads"] = std::to_string(sim_opts.threads);
            if (!out_path.empty()) {
                std::error_code ec;
                fs::create_directories(out_path, ec);
                if (!fs::is_directory(out_path))
                    throw DataError("cannot create output directory " + out_path);
            }
            const auto tables = cmd_simulate(sim_opts);
            for (const auto& table : tables) {
                std::string body;
                if (fmt == Format::Json) {
                    body = dump_json(simulation_json(table), manifest);
                } else {
                    std::ostringstream os;
                    write_simulation_csv(os, table);
                    body = os.str();
                }
                const std::string file = out_path.empty()
                                             ? std::string()
                                             : (fs::path(out_path) / (simulation_file_stem(table) +
                                                                       (fmt == Format::Json ? ".json" : ".csv")))
                                                   .string();
                if (file.empty() && tables.size() > 1)
                    std::cout << "# alpha=" << format_shortest(table.alpha)
                              << " lambda=" << format_shortest(table.lambda) << '\n';
                emit(body, file, manifest);
            }
        } else if (*gof) {
            const Dataset data = gof_data.load();
            const FitMethod fit = gof_fit == "min-ks" ? FitMethod::MinKs : FitMethod::Mle;
            const std::string label = gof_alpha ? "given" : gof_fit;
            const KsResult r = cmd_gof(data, gof_lambda, gof_alpha, fit);
            manifest.command = "gof";
            gof_data.record(manifest);
            manifest.parameters["lambda"] = format_shortest(gof_lambda);
            manifest.parameters["fit"] = label;
            manifest.parameters["alpha"] = format_shortest(r.fitted.alpha());
            std::ostringstream body;
            if (gof_format == "json") {
                body << dump_json(gof_json(r, label), manifest);
            } else if (gof_format == "csv") {
                body << "n,lambda,alpha,d_stat,p_value\n"
                     << r.n << ',' << format_shortest(r.fitted.lambda()) << ',' << format_shortest(r.fitted.alpha())
                     << ',' << format_shortest(r.d_stat) << ',' << format_shortest(r.p_value) << '\n';
            } else {
                write_gof_text(body, r, label);
            }
            emit(body.str(), out_path, manifest);
        } else if (*plot) {
            const PlotKind kind = parse_plot_kind(plot_kind);
            manifest.command = "plot-data";
            manifest.parameters["kind"] = plot_kind;
            std::vector<SeriesPoint> points;
            if (kind == PlotKind::PdfFamily) {
                if (!plot_lambdas.empty())
                    pdf_opts.lambdas = plot_lambdas;
                manifest.parameters["alpha"] = join(pdf_opts.alphas);
                manifest.parameters["lambda"] = join(pdf_opts.lambdas);
                manifest.parameters["x_max"] = format_shortest(pdf_opts.x_max);
                manifest.parameters["x_step"] = format_shortest(pdf_opts.x_step);
                points = pdf_family(pdf_opts);
            } else {
                if (plot_lambdas.size() > 1)
                    throw UsageError("c-sweep takes a single --lambda");
                if (!plot_lambdas.empty())
                    sweep_opts.lambda = plot_lambdas.front();
                const Dataset data = plot_data.load();
                plot_data.record(manifest);
                manifest.parameters["lambda"] = format_shortest(sweep_opts.lambda);
                manifest.parameters["c_min"] = format_shortest(sweep_opts.c_min);
                manifest.parameters["c_max"] = format_shortest(sweep_opts.c_max);
                manifest.parameters["c_step"] = format_shortest(sweep_opts.c_step);
                points = c_sweep(data, sweep_opts, kind);
            }
            std::ostringstream body;
            write_series_csv(body, points);
            emit(body.str(), out_path, manifest);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kData;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kOk;
}
