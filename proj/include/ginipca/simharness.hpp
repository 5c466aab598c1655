#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ginipca/matrix.hpp"
#include "ginipca/pipeline.hpp"
#include "ginipca/rng.hpp"

namespace ginipca {

/// Which triangle to trust when a supplied correlation matrix is asymmetric.
enum class RhoRepair { lower, upper };

/// Monte Carlo contamination study settings.
struct SimConfig {
    Matrix rho;
    std::size_t n_obs = 500;
    std::vector<double> theta_grid;
    std::vector<double> nus{2.0, 4.0, 6.0};
    std::uint64_t seed = 20190101;
    std::size_t axes_tracked = 2;
    RhoRepair rho_repair = RhoRepair::lower;

    /// Highly correlated 4-variable design (first simulation).
    static SimConfig concentrated();
    /// Less concentrated 4-variable design, printed asymmetric (second simulation).
    static SimConfig dispersed();

    /// theta = 1, 2, ..., 1000.
    static std::vector<double> full_grid();
    /// theta = 1, 11, 21, ..., 991.
    static std::vector<double> reduced_grid();

    /// Throws ParameterError for empty grids, theta < 1, nu <= 1, or N < 2.
    void validate() const;
};

/// Outcome of correlation-matrix repair.
struct RepairedRho {
    Matrix rho;
    bool symmetrized = false;
    bool projected = false;
    int projection_iterations = 0;
};

/// MSE series for one method (Gini at one nu, or variance).
struct MethodSeries {
    std::string label;
    Method method = Method::gini;
    double nu = 2.0;
    std::vector<double> mean_shares;             ///< clean-sample share per axis, percent
    std::vector<double> mse_eigen;               ///< per axis
    std::vector<std::vector<double>> mse_act;    ///< [tracked axis][observation], percent²
    std::vector<std::vector<double>> mse_rct;    ///< same shape
    std::vector<double> sd_mse_act;              ///< sample sd of mse_act over observations
};

struct SimReport {
    std::vector<MethodSeries> methods;
    std::size_t replications = 0;
    SimConfig config_echo;  ///< with the repaired rho
    RepairedRho repair;
};

/// Mean of squared differences. Throws DimensionError on length mismatch or empty input.
double mse(std::span<const double> observed, std::span<const double> reference);

/// Lower Cholesky factor of a positive semi-definite matrix. Zero pivots
/// (within 1e-10 of the diagonal scale) give zero columns; clearly negative
/// pivots raise ParameterError.
Matrix cholesky_psd(const Matrix& a);

/// Nearest correlation matrix by alternating projections onto the PSD cone
/// and the unit-diagonal set, with Dykstra's correction.
Matrix nearest_correlation(const Matrix& a, double tolerance = 1e-10, int max_iterations = 10000,
                           int* iterations = nullptr);

/// Mirrors the trusted triangle of an asymmetric input, then projects to the
/// nearest correlation matrix if the result is indefinite.
RepairedRho repair_correlation(const Matrix& rho, RhoRepair which);

/// n iid draws of N(0, rho) via its Cholesky factor. Same (rho, n, seed) gives the same bits.
DataMatrix sample_mvn(const Matrix& rho, std::size_t n, std::uint64_t seed);
DataMatrix sample_mvn(const Matrix& rho, std::size_t n, CounterRng& rng);

/// Copy of x with every entry of `row` multiplied by theta.
DataMatrix contaminate(const DataMatrix& x, double theta, std::size_t row);

/// Runs the contamination study: for every theta draw a fresh sample, scale
/// one random row by theta, and fit every method on the clean and the
/// contaminated sample. Squared deviations of shares, ACT and RCT (all in
/// percent) are averaged over the grid. Iterations are spread over `jobs`
/// threads; the report is bitwise independent of `jobs`.
SimReport run_algorithm1(const SimConfig& config, unsigned jobs = 1);

}  // namespace ginipca
