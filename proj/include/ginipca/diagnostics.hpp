#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ginipca/matrix.hpp"
#include "ginipca/pipeline.hpp"

namespace ginipca {

/// Per-observation contributions. Undefined entries are NaN: a whole ACT
/// column when the axis carries no variability, a whole RCT row when the
/// observation projects onto the origin.
struct ContributionTable {
    Matrix act;  ///< N x K, columns sum to one
    Matrix rct;  ///< N x K, rows sum to one
    std::vector<double> axis_ggmd;
};

/// Axis/variable significance grid. Row index is the axis, column the variable.
struct SignificanceTable {
    Matrix u;
    Matrix se;
    Matrix z;
    Matrix p;
    Matrix act_tilde;  ///< columns of u scaled to unit l2 norm
};

struct UTestResult {
    double u = 0.0;
    double se = 0.0;
    double z = 0.0;
    double p = 1.0;
};

/// GGMD of axis k, -(2 nu / (N (N - 1))) f_kᵀ R_z^c b_k, which equals mu_k.
/// For the variance model this is the variance of the scores, f_kᵀ f_k / N.
/// Throws DimensionError for an out-of-range axis.
double ggmd(const GiniModel& model, std::size_t axis);

/// ACT_ik = f_ik psi_ik / sum_j f_jk psi_jk with psi_k = R_z^c b_k. The
/// realized column total is used as denominator so that columns sum to one.
/// Variance model: f_ik² / sum_j f_jk².
Matrix act(const GiniModel& model);

/// RCT_ik = |f_ik| / sum_l |f_il| (Manhattan distance to the origin).
Matrix rct(const GiniModel& model);

/// RCT on raw score rows.
Matrix relative_contributions(const Matrix& scores);

ContributionTable contributions(const GiniModel& model);

/// v_kl, the G-correlation of axis k (value side) with standardized variable
/// l (rank side): GMD(f_k, z_l) / GMD(f_k, f_k). Pearson correlations for
/// the variance model. Axes with zero own GMD get a NaN row.
Matrix axis_variable_correlations(const GiniModel& model);

/// The statistic behind the U-test on raw vectors: G-correlation of `axis`
/// with the ranks of `variable`, or their Pearson correlation.
double axis_statistic(std::span<const double> axis, std::span<const double> variable, Method method,
                      double nu);

/// Delete-one jackknife test of a zero axis/variable correlation. Each
/// leave-one-out statistic recomputes ranks on the remaining N - 1 rows.
/// Requires N >= 10. p is two-sided under N(0, 1). A zero standard error
/// gives z = ±inf and p = 0 when u != 0, and z = 0, p = 1 when u == 0.
UTestResult u_statistic_test(std::span<const double> axis, std::span<const double> variable,
                             Method method, double nu);

/// Test of axis `axis` against variable `variable` of a fitted model.
UTestResult u_stat_test(const GiniModel& model, std::size_t axis, std::size_t variable);

/// Full grid for the first `n_axes` axes (all when 0). Cells are independent
/// and spread over `jobs` threads; results do not depend on `jobs`.
SignificanceTable significance(const GiniModel& model, std::size_t n_axes = 0, unsigned jobs = 1);

/// Scales every column of `u` to unit l2 norm; zero columns become NaN.
Matrix act_tilde(const Matrix& u);

/// "5%" for p < 0.05, "10%" for p < 0.10, "" otherwise.
std::string significance_class(double p);

}  // namespace ginipca
