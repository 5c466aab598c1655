#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ginipca/diagnostics.hpp"
#include "ginipca/pipeline.hpp"
#include "ginipca/simharness.hpp"

namespace ginipca {

struct MethodReport {
    GiniModel model;
    std::vector<double> shares;  ///< eigen_shares, percent
    ContributionTable contributions;
    Matrix axis_correlations;
    std::optional<SignificanceTable> significance;
};

struct ReportMetadata {
    std::vector<double> nus;
    std::size_t n_obs = 0;
    std::size_t n_vars = 0;
    std::optional<std::uint64_t> seed;
    std::string tool_version;
    std::string kernels;
};

/// Everything written for one dataset: one MethodReport per fitted method.
struct ReportBundle {
    std::vector<MethodReport> methods;
    std::size_t projection_axes = 2;
    ReportMetadata metadata;
};

struct ReportOptions {
    std::vector<double> nus{2.0, 4.0, 6.0};
    bool gini = true;
    bool variance = true;
    std::size_t projection_axes = 2;
    bool significance = false;
    unsigned jobs = 1;
};

ReportBundle build_report(const DataMatrix& x, const ReportOptions& options);

struct OutputFormats {
    bool csv = true;
    bool json = false;
    bool svg = false;
};

/// Writes eigen.csv|json, act_/rct_/projection_/significance_<label>.csv,
/// optional SVG plots and report.json. Returns the paths written, in order.
std::vector<std::filesystem::path> write_report(const ReportBundle& bundle,
                                                const std::filesystem::path& dir,
                                                const OutputFormats& formats);

nlohmann::json to_json(const ReportBundle& bundle);
nlohmann::json to_json(const SimReport& report);
nlohmann::json to_json(const SimConfig& config);

/// Reads a simulation config. Keys: "preset" (concentrated|dispersed) or "rho";
/// "n_obs", "theta_grid" (array, or {"start","stop","step"}), "nus", "seed",
/// "axes_tracked", "rho_repair" (lower|upper). Missing keys keep defaults.
SimConfig sim_config_from_json(const nlohmann::json& j);

/// Writes sim_report.json and/or the per-axis CSV tables.
std::vector<std::filesystem::path> write_sim_report(const SimReport& report,
                                                    const std::filesystem::path& dir,
                                                    const OutputFormats& formats);

/// Fixed-width text tables for terminal output.
std::string format_eigen_table(const ReportBundle& bundle);
std::string format_significance_tables(const ReportBundle& bundle);
std::string format_sim_summary(const SimReport& report);

}  // namespace ginipca
