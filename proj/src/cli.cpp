#include "ginipca/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ginipca/errors.hpp"
#include "ginipca/io.hpp"
#include "ginipca/kernels.hpp"
#include "ginipca/log.hpp"
#include "ginipca/report.hpp"

namespace ginipca {

namespace {

struct PcaArgs {
    std::string input;
    std::string row_labels = "auto";
    std::vector<double> nus{2.0, 4.0, 6.0};
    std::vector<std::string> methods{"gini", "variance"};
    std::string output_dir;
    std::vector<std::string> formats{"csv"};
    bool svg = false;
    std::size_t axes = 2;
    bool significance = false;
    unsigned jobs = 1;
};

struct SimArgs {
    std::string config;
    std::string preset = "concentrated";
    bool reduced = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> n_obs;
    unsigned jobs = 1;
    std::string output_dir = ".";
    std::vector<std::string> formats{"json"};
};

void add_report_options(CLI::App& cmd, PcaArgs& a, bool with_significance_flag) {
    cmd.add_option("--nu", a.nus, "Gini parameters, comma separated")->delimiter(',')->capture_default_str();
    cmd.add_option("--method", a.methods, "Methods to fit: gini, variance")
        ->delimiter(',')
        ->check(CLI::IsMember({"gini", "variance"}))
        ->capture_default_str();
    cmd.add_option("--output-dir", a.output_dir, "Directory for report files (none: print only)");
    cmd.add_option("--format", a.formats, "Report formats: csv, json")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_flag("--svg", a.svg, "Also write SVG projection and contribution plots");
    cmd.add_option("--axes", a.axes, "Axes kept in projections and significance tables")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--jobs", a.jobs, "Worker threads for the jackknife")->check(CLI::PositiveNumber);
    if (with_significance_flag) cmd.add_flag("--significance", a.significance, "Run jackknife U-tests");
}

OutputFormats formats_of(const std::vector<std::string>& names, bool svg) {
    OutputFormats f{false, false, svg};
    for (const auto& n : names) {
        if (n == "csv") f.csv = true;
        if (n == "json") f.json = true;
    }
    return f;
}

DataMatrix read_input(const PcaArgs& a) {
    if (a.row_labels == "yes") return load_csv(a.input, true);
    if (a.row_labels == "no") return load_csv(a.input, false);
    std::ifstream in(a.input, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + a.input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return parse_csv(text, detect_row_labels(text));
}

void emit(const ReportBundle& bundle, const PcaArgs& a, std::ostream& out) {
    out << format_eigen_table(bundle);
    if (a.significance) out << '\n' << format_significance_tables(bundle);
    if (!a.output_dir.empty()) {
        const auto paths = write_report(bundle, a.output_dir, formats_of(a.formats, a.svg));
        log::info("wrote " + std::to_string(paths.size()) + " files to " + a.output_dir);
    }
}

ReportOptions report_options(const PcaArgs& a) {
    ReportOptions o;
    o.nus = a.nus;
    o.gini = std::find(a.methods.begin(), a.methods.end(), "gini") != a.methods.end();
    o.variance = std::find(a.methods.begin(), a.methods.end(), "variance") != a.methods.end();
    o.projection_axes = a.axes;
    o.significance = a.significance;
    o.jobs = a.jobs;
    for (double nu : o.nus)
        if (!(nu > 1.0) || !std::isfinite(nu)) throw ParameterError("--nu values must be finite and > 1");
    return o;
}

void print_pearson(const DataMatrix& x, std::ostream& out) {
    const GiniModel classic = fit_classic_pca(x);
    const Matrix& r = classic.correlation.gc;
    out << "Pearson correlations\n";
    char buf[32];
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::snprintf(buf, sizeof buf, "%-10s", x.column_names[i].c_str());
        out << buf;
        for (std::size_t j = 0; j < r.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%9.3f", r(i, j));
            out << buf;
        }
        out << '\n';
    }
}

int run_simulate(const SimArgs& a, std::ostream& out) {
    SimConfig config;
    if (!a.config.empty()) {
        std::ifstream in(a.config, std::ios::binary);
        if (!in) throw ParseError("cannot open '" + a.config + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON in '") + a.config + "': " + e.what());
        }
        config = sim_config_from_json(j);
    } else {
        config = a.preset == "dispersed" ? SimConfig::dispersed() : SimConfig::concentrated();
        config.theta_grid = a.reduced ? SimConfig::reduced_grid() : SimConfig::full_grid();
    }
    if (a.reduced && !a.config.empty()) config.theta_grid = SimConfig::reduced_grid();
    if (a.seed) config.seed = *a.seed;
    if (a.n_obs) config.n_obs = *a.n_obs;

    out << "seed: " << config.seed << '\n';
    const SimReport report = run_algorithm1(config, a.jobs);
    out << format_sim_summary(report);
    const auto paths = write_sim_report(report, a.output_dir, formats_of(a.formats, false));
    for (const auto& p : paths) out << "wrote " << p.string() << '\n';
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    if (const char* env = std::getenv("GINI_PCA_LOG")) log::set_level(log::parse_level(env, log::Level::error));

    CLI::App app{"Generalized Gini principal component analysis", "gini_pca"};
    app.require_subcommand(1);

    PcaArgs pca;
    auto* pca_cmd = app.add_subcommand("pca", "Fit Gini and/or variance PCA on a CSV file");
    pca_cmd->add_option("--input", pca.input, "Input CSV")->required()->check(CLI::ExistingFile);
    pca_cmd->add_option("--row-labels", pca.row_labels, "First column holds row labels")
        ->check(CLI::IsMember({"auto", "yes", "no"}))
        ->capture_default_str();
    add_report_options(*pca_cmd, pca, true);

    PcaArgs sig;
    sig.significance = true;
    auto* sig_cmd = app.add_subcommand("significance", "Jackknife U-tests of axis/variable correlations");
    sig_cmd->add_option("--input", sig.input, "Input CSV")->required()->check(CLI::ExistingFile);
    sig_cmd->add_option("--row-labels", sig.row_labels, "First column holds row labels")
        ->check(CLI::IsMember({"auto", "yes", "no"}))
        ->capture_default_str();
    add_report_options(*sig_cmd, sig, false);

    SimArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo contamination study");
    auto* config_opt = sim_cmd->add_option("--config", sim.config, "Simulation config JSON")->check(CLI::ExistingFile);
    sim_cmd->add_option("--preset", sim.preset, "Built-in design when no config is given")
        ->check(CLI::IsMember({"concentrated", "dispersed"}))
        ->excludes(config_opt)
        ->capture_default_str();
    sim_cmd->add_flag("--reduced", sim.reduced, "Use theta = 1, 11, ..., 991");
    sim_cmd->add_option("--seed", sim.seed, "Override the seed");
    sim_cmd->add_option("--n-obs", sim.n_obs, "Override the sample size");
    sim_cmd->add_option("--jobs", sim.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--output-dir", sim.output_dir, "Directory for sim_report.json")->capture_default_str();
    sim_cmd->add_option("--format", sim.formats, "Report formats: json, csv")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    PcaArgs cars;
    cars.significance = true;
    auto* cars_cmd = app.add_subcommand("cars", "Reproduce the cars analysis on the embedded data");
    add_report_options(*cars_cmd, cars, false);

    auto* version_cmd = app.add_subcommand("version", "Print the tool version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (*version_cmd) {
            out << "gini_pca " << kToolVersion << " (kernels: "
                << kernels::backend_name(kernels::active_backend()) << ")\n";
            return exit_ok;
        }
        if (*sim_cmd) return run_simulate(sim, out);
        if (*cars_cmd) {
            const DataMatrix x = cars_dataset();
            print_pearson(x, out);
            out << '\n';
            emit(build_report(x, report_options(cars)), cars, out);
            return exit_ok;
        }
        PcaArgs& a = *pca_cmd ? pca : sig;
        const DataMatrix x = read_input(a);
        emit(build_report(x, report_options(a)), a, out);
        return exit_ok;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return exit_numeric;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_data;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_data;
    }
}

}  // namespace ginipca
