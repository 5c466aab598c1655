#include "ginipca/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ginipca/errors.hpp"
#include "ginipca/io.hpp"
#include "ginipca/kernels.hpp"
#include "ginipca/svg.hpp"

namespace ginipca {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cell(double v) {
    if (std::isnan(v)) return "NA";
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string csv_text(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

json vec(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(number(x));
    return a;
}

json mat(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec(m.row(r)));
    return rows;
}

void write_file(const fs::path& path, const std::string& content, std::vector<fs::path>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << content;
    written.push_back(path);
}

std::string axis_header(std::size_t k) { return "axis" + std::to_string(k + 1); }

// Observations in rows, one column per axis; scale multiplies every value.
std::string observation_table(const std::vector<std::string>& labels, const Matrix& values,
                              std::size_t n_axes, double scale) {
    std::string out = "observation";
    for (std::size_t k = 0; k < n_axes; ++k) out += "," + axis_header(k);
    out += '\n';
    for (std::size_t i = 0; i < values.rows(); ++i) {
        out += csv_text(labels[i]);
        for (std::size_t k = 0; k < n_axes; ++k) out += "," + cell(scale * values(i, k));
        out += '\n';
    }
    return out;
}

std::string significance_csv(const MethodReport& m) {
    const auto& sig = *m.significance;
    std::string out = "axis,variable,correlation,se,z,p,significance,act_tilde\n";
    for (std::size_t a = 0; a < sig.u.rows(); ++a)
        for (std::size_t v = 0; v < sig.u.cols(); ++v)
            out += std::to_string(a + 1) + "," + csv_text(m.model.column_names[v]) + "," + cell(sig.u(a, v)) +
                   "," + cell(sig.se(a, v)) + "," + cell(sig.z(a, v)) + "," + cell(sig.p(a, v)) + "," +
                   significance_class(sig.p(a, v)) + "," + cell(sig.act_tilde(a, v)) + "\n";
    return out;
}

json method_json(const MethodReport& m, std::size_t h) {
    const auto& model = m.model;
    json j;
    j["label"] = model.label();
    j["method"] = model.method == Method::gini ? "gini" : "variance";
    j["nu"] = model.method == Method::gini ? json(model.params.nu) : json(nullptr);
    j["shares_percent"] = vec(m.shares);
    j["lambdas"] = vec(model.eigen.lambdas);
    j["mus"] = vec(model.eigen.mus);
    j["trace_shares"] = vec(model.eigen.shares);
    j["eigenvectors"] = mat(model.eigen.vectors);
    j["correlation_matrix"] = mat(model.correlation.gc);
    j["axis_ggmd"] = vec(m.contributions.axis_ggmd);
    j["axis_variable_correlations"] = mat(m.axis_correlations);

    const std::size_t n = model.n_obs();
    json proj = json::array();
    json act_rows = json::array();
    json rct_rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> p(h), a(model.n_axes()), r(model.n_axes());
        for (std::size_t k = 0; k < h; ++k) p[k] = model.scores(i, k);
        for (std::size_t k = 0; k < model.n_axes(); ++k) {
            a[k] = m.contributions.act(i, k);
            r[k] = m.contributions.rct(i, k);
        }
        proj.push_back(vec(p));
        act_rows.push_back(vec(a));
        rct_rows.push_back(vec(r));
    }
    j["projection"] = proj;
    j["act"] = act_rows;
    j["rct"] = rct_rows;
    if (m.significance) {
        const auto& s = *m.significance;
        j["significance"] = {{"u", mat(s.u)}, {"se", mat(s.se)}, {"z", mat(s.z)},
                             {"p", mat(s.p)}, {"act_tilde", mat(s.act_tilde)}};
    } else {
        j["significance"] = nullptr;
    }
    return j;
}

json series_json(const MethodSeries& s) {
    json j;
    j["label"] = s.label;
    j["method"] = s.method == Method::gini ? "gini" : "variance";
    j["nu"] = s.method == Method::gini ? json(s.nu) : json(nullptr);
    j["mean_shares"] = vec(s.mean_shares);
    j["mse_eigen"] = vec(s.mse_eigen);
    j["sd_mse_act"] = vec(s.sd_mse_act);
    json act = json::array();
    json rct = json::array();
    for (const auto& v : s.mse_act) act.push_back(vec(v));
    for (const auto& v : s.mse_rct) rct.push_back(vec(v));
    j["mse_act"] = act;
    j["mse_rct"] = rct;
    return j;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string fixed(double v, int decimals) {
    if (std::isnan(v)) return "NA";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

ReportBundle build_report(const DataMatrix& x, const ReportOptions& options) {
    x.validate();
    ReportBundle bundle;
    bundle.projection_axes = std::min<std::size_t>(std::max<std::size_t>(options.projection_axes, 1), x.n_vars());
    bundle.metadata.nus = options.gini ? options.nus : std::vector<double>{};
    bundle.metadata.n_obs = x.n_obs();
    bundle.metadata.n_vars = x.n_vars();
    bundle.metadata.tool_version = kToolVersion;
    bundle.metadata.kernels = std::string(kernels::backend_name(kernels::active_backend()));

    auto add = [&](GiniModel model) {
        MethodReport m;
        m.shares = eigen_shares(model);
        m.contributions = contributions(model);
        m.axis_correlations = axis_variable_correlations(model);
        if (options.significance) m.significance = significance(model, bundle.projection_axes, options.jobs);
        m.model = std::move(model);
        bundle.methods.push_back(std::move(m));
    };
    if (options.gini)
        for (double nu : options.nus) add(fit_gini_pca(x, GiniParams{nu}));
    if (options.variance) add(fit_classic_pca(x));
    return bundle;
}

json to_json(const ReportBundle& bundle) {
    json j;
    const auto& md = bundle.metadata;
    j["metadata"] = {{"tool_version", md.tool_version},
                     {"nus", md.nus},
                     {"n_obs", md.n_obs},
                     {"n_vars", md.n_vars},
                     {"seed", md.seed ? json(*md.seed) : json(nullptr)},
                     {"kernels", md.kernels},
                     {"projection_axes", bundle.projection_axes}};
    if (!bundle.methods.empty()) {
        j["row_labels"] = bundle.methods.front().model.row_labels;
        j["column_names"] = bundle.methods.front().model.column_names;
    }
    json methods = json::array();
    for (const auto& m : bundle.methods) methods.push_back(method_json(m, bundle.projection_axes));
    j["methods"] = methods;
    return j;
}

std::vector<fs::path> write_report(const ReportBundle& bundle, const fs::path& dir,
                                   const OutputFormats& formats) {
    fs::create_directories(dir);
    std::vector<fs::path> written;
    const std::size_t h = bundle.projection_axes;

    if (formats.csv) {
        std::string eigen = "axis";
        for (const auto& m : bundle.methods) eigen += "," + m.model.label();
        eigen += '\n';
        const std::size_t k = bundle.methods.empty() ? 0 : bundle.methods.front().shares.size();
        for (std::size_t a = 0; a < k; ++a) {
            eigen += std::to_string(a + 1);
            for (const auto& m : bundle.methods) eigen += "," + cell(m.shares[a]);
            eigen += '\n';
        }
        write_file(dir / "eigen.csv", eigen, written);

        for (const auto& m : bundle.methods) {
            const auto& model = m.model;
            const std::string label = model.label();
            write_file(dir / ("act_" + label + ".csv"),
                       observation_table(model.row_labels, m.contributions.act, model.n_axes(), 1.0), written);
            write_file(dir / ("rct_" + label + ".csv"),
                       observation_table(model.row_labels, m.contributions.rct, model.n_axes(), 1.0), written);
            write_file(dir / ("projection_" + label + ".csv"),
                       observation_table(model.row_labels, model.scores, h, 1.0), written);
            if (m.significance) write_file(dir / ("significance_" + label + ".csv"), significance_csv(m), written);
        }
    }

    if (formats.json) {
        json eigen;
        eigen["metadata"] = to_json(bundle)["metadata"];
        json methods = json::array();
        for (const auto& m : bundle.methods)
            methods.push_back({{"label", m.model.label()},
                               {"shares_percent", vec(m.shares)},
                               {"lambdas", vec(m.model.eigen.lambdas)},
                               {"mus", vec(m.model.eigen.mus)}});
        eigen["methods"] = methods;
        write_file(dir / "eigen.json", eigen.dump(2) + "\n", written);
        write_file(dir / "report.json", to_json(bundle).dump(2) + "\n", written);
    }

    if (formats.svg) {
        for (const auto& m : bundle.methods) {
            const auto& model = m.model;
            const std::string label = model.label();
            if (model.n_axes() >= 2) {
                svg::ScatterSpec spec{"Projection (" + label + ")",
                                      "Axis 1 (" + fixed(m.shares[0], 2) + "%)",
                                      "Axis 2 (" + fixed(m.shares[1], 2) + "%)"};
                write_file(dir / ("projection_" + label + ".svg"),
                           svg::scatter(model.scores.col(0), model.scores.col(1), model.row_labels, spec), written);
            }
            const double mean_line = 100.0 / static_cast<double>(model.n_obs());
            for (std::size_t a = 0; a < h; ++a) {
                std::vector<double> pct(model.n_obs());
                for (std::size_t i = 0; i < pct.size(); ++i) pct[i] = 100.0 * m.contributions.act(i, a);
                write_file(dir / ("act_" + label + "_axis" + std::to_string(a + 1) + ".svg"),
                           svg::bar_chart(pct, model.row_labels, mean_line,
                                          "ACT, axis " + std::to_string(a + 1) + " (" + label + ")"),
                           written);
            }
        }
    }
    return written;
}

json to_json(const SimConfig& config) {
    json j;
    j["rho"] = mat(config.rho);
    j["n_obs"] = config.n_obs;
    j["theta_grid"] = config.theta_grid;
    j["nus"] = config.nus;
    j["seed"] = config.seed;
    j["axes_tracked"] = config.axes_tracked;
    j["rho_repair"] = config.rho_repair == RhoRepair::lower ? "lower" : "upper";
    return j;
}

json to_json(const SimReport& report) {
    json j;
    j["tool_version"] = kToolVersion;
    j["replications"] = report.replications;
    j["config"] = to_json(report.config_echo);
    j["rho_repair"] = {{"symmetrized", report.repair.symmetrized},
                       {"projected", report.repair.projected},
                       {"projection_iterations", report.repair.projection_iterations}};
    json methods = json::array();
    for (const auto& s : report.methods) methods.push_back(series_json(s));
    j["methods"] = methods;
    return j;
}

SimConfig sim_config_from_json(const json& j) {
    try {
        SimConfig c = SimConfig::concentrated();
        if (j.contains("preset")) {
            const auto preset = j.at("preset").get<std::string>();
            if (preset == "concentrated") c = SimConfig::concentrated();
            else if (preset == "dispersed") c = SimConfig::dispersed();
            else throw ParseError("unknown preset '" + preset + "'");
        }
        if (j.contains("rho")) {
            const auto rows = j.at("rho").get<std::vector<std::vector<double>>>();
            Matrix rho(rows.size(), rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != rows.size()) throw ParseError("rho must be square");
                for (std::size_t col = 0; col < rows.size(); ++col) rho(r, col) = rows[r][col];
            }
            c.rho = std::move(rho);
        }
        if (j.contains("n_obs")) c.n_obs = j.at("n_obs").get<std::size_t>();
        if (j.contains("theta_grid")) {
            const auto& g = j.at("theta_grid");
            if (g.is_array()) {
                c.theta_grid = g.get<std::vector<double>>();
            } else {
                const double start = g.value("start", 1.0);
                const double stop = g.value("stop", 1000.0);
                const double step = g.value("step", 1.0);
                if (!(step > 0.0)) throw ParseError("theta_grid.step must be positive");
                c.theta_grid.clear();
                for (double t = start; t <= stop + 1e-9; t += step) c.theta_grid.push_back(t);
            }
        }
        if (j.contains("nus")) c.nus = j.at("nus").get<std::vector<double>>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("axes_tracked")) c.axes_tracked = j.at("axes_tracked").get<std::size_t>();
        if (j.contains("rho_repair")) {
            const auto r = j.at("rho_repair").get<std::string>();
            if (r == "lower") c.rho_repair = RhoRepair::lower;
            else if (r == "upper") c.rho_repair = RhoRepair::upper;
            else throw ParseError("rho_repair must be 'lower' or 'upper'");
        }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid simulation config: ") + e.what());
    }
}

std::vector<fs::path> write_sim_report(const SimReport& report, const fs::path& dir,
                                       const OutputFormats& formats) {
    fs::create_directories(dir);
    std::vector<fs::path> written;
    if (formats.json) write_file(dir / "sim_report.json", to_json(report).dump(2) + "\n", written);
    if (formats.csv) {
        std::string eigen = "axis";
        for (const auto& s : report.methods) eigen += "," + s.label + "_share," + s.label + "_mse";
        eigen += '\n';
        const std::size_t k = report.config_echo.rho.rows();
        for (std::size_t a = 0; a < k; ++a) {
            eigen += std::to_string(a + 1);
            for (const auto& s : report.methods) eigen += "," + cell(s.mean_shares[a]) + "," + cell(s.mse_eigen[a]);
            eigen += '\n';
        }
        write_file(dir / "sim_eigen.csv", eigen, written);

        for (std::size_t a = 0; a < report.config_echo.axes_tracked; ++a) {
            for (const char* kind : {"act", "rct"}) {
                std::string out = "observation";
                for (const auto& s : report.methods) out += "," + s.label;
                out += '\n';
                const std::size_t n = report.config_echo.n_obs;
                for (std::size_t i = 0; i < n; ++i) {
                    out += std::to_string(i + 1);
                    for (const auto& s : report.methods)
                        out += "," + cell(std::string(kind) == "act" ? s.mse_act[a][i] : s.mse_rct[a][i]);
                    out += '\n';
                }
                write_file(dir / ("sim_" + std::string(kind) + "_axis" + std::to_string(a + 1) + ".csv"), out,
                           written);
            }
        }
    }
    return written;
}

std::string format_eigen_table(const ReportBundle& bundle) {
    std::string out = pad("eigenvalues (%)", 16);
    for (const auto& m : bundle.methods) out += pad(m.model.label(), 14);
    out += '\n';
    const std::size_t k = bundle.methods.empty() ? 0 : bundle.methods.front().shares.size();
    for (std::size_t a = 0; a < k; ++a) {
        out += pad("Axis " + std::to_string(a + 1), 16);
        for (const auto& m : bundle.methods) out += pad(fixed(m.shares[a], 5), 14);
        out += '\n';
    }
    return out;
}

std::string format_significance_tables(const ReportBundle& bundle) {
    std::string out;
    for (const auto& m : bundle.methods) {
        if (!m.significance) continue;
        const auto& s = *m.significance;
        out += m.model.label() + "  (** p < 5%, * p < 10%)\n";
        out += pad("", 20);
        for (const auto& name : m.model.column_names) out += pad(name, 12);
        out += '\n';
        for (std::size_t a = 0; a < s.u.rows(); ++a) {
            out += pad("Axis " + std::to_string(a + 1) + " correlation", 20);
            for (std::size_t v = 0; v < s.u.cols(); ++v) out += pad(fixed(s.u(a, v), 3), 12);
            out += '\n' + pad("       U-stat", 20);
            for (std::size_t v = 0; v < s.u.cols(); ++v) {
                const std::string cls = significance_class(s.p(a, v));
                out += pad(fixed(s.z(a, v), 3) + (cls == "5%" ? "**" : cls == "10%" ? "*" : ""), 12);
            }
            out += '\n';
        }
        out += '\n';
    }
    return out;
}

std::string format_sim_summary(const SimReport& report) {
    std::string out = "replications: " + std::to_string(report.replications) +
                      ", seed: " + std::to_string(report.config_echo.seed) + "\n";
    out += pad("", 18);
    for (const auto& s : report.methods) out += pad(s.label, 14);
    out += '\n';
    const std::size_t k = report.config_echo.rho.rows();
    for (std::size_t a = 0; a < k; ++a) {
        out += pad("Axis " + std::to_string(a + 1) + " share", 18);
        for (const auto& s : report.methods) out += pad(fixed(s.mean_shares[a], 4), 14);
        out += '\n' + pad("       MSE", 18);
        for (const auto& s : report.methods) out += pad(fixed(s.mse_eigen[a], 4), 14);
        out += '\n';
    }
    for (std::size_t a = 0; a < report.config_echo.axes_tracked; ++a) {
        out += pad("sd MSE(ACT) " + std::to_string(a + 1), 18);
        for (const auto& s : report.methods) out += pad(fixed(s.sd_mse_act[a], 2), 14);
        out += '\n';
    }
    return out;
}

}  // namespace ginipca
