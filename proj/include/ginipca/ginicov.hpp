#pragma once

#include <span>

#include "ginipca/matrix.hpp"
#include "ginipca/ranks.hpp"

namespace ginipca {

/// Variability-attitude parameter nu. Larger values weight the lower tail more.
struct GiniParams {
    double nu = 2.0;

    /// Throws ParameterError unless nu > 1.
    void validate() const;
};

/// Column-centered data scaled to unit dispersion, with the centering and
/// scaling that were applied. For the Gini pipeline the scale is
/// GMD_nu(x, x); the variance baseline stores the population standard deviation.
struct StandardizedMatrix {
    Matrix z;
    std::vector<double> column_means;
    std::vector<double> column_scales;
};

/// K x K matrix with entry (k, l) = GC_nu(x_k, x_l): x_k enters by value,
/// x_l by its ranks only. Diagonal is one; generally not symmetric.
struct GiniCorrelationMatrix {
    Matrix gc;
    double nu = 2.0;
};

/// Generalized Gini mean difference
///   -(2 nu / (N (N - 1))) * sum_i (x_i - mean(x)) * (R(y_i)^(nu-1) - mean(R(y)^(nu-1)))
/// where R(y) are the decumulative ranks of `rank_side`. For nu = 2 and
/// x == y this is the mean absolute difference over distinct pairs.
double gmd(std::span<const double> value_side, std::span<const double> rank_side, GiniParams params);

/// Same, with the centered rank powers of the rank side precomputed.
double gmd(std::span<const double> value_side, const CenteredRankPower& rank_side);

/// G-correlation GMD(x, y) / GMD(x, x). Throws DegenerateColumnError (column 0)
/// when GMD(x, x) is zero.
double gini_correlation(std::span<const double> value_side, std::span<const double> rank_side,
                        GiniParams params);

/// z = (x - mean) / GMD_nu(x, x) column by column. A column with zero GMD
/// raises DegenerateColumnError naming it.
StandardizedMatrix gini_standardize(const DataMatrix& x, GiniParams params);

/// Centered rank powers of every column, as an N x K matrix (R_z^c). Ranks of
/// the standardized data equal those of the raw data.
Matrix centered_rank_matrix(const Matrix& x, GiniParams params);

/// GC_nu = -(2 nu / (N (N - 1))) Zᵀ R_z^c on the standardized matrix.
GiniCorrelationMatrix gini_correlation_matrix(const StandardizedMatrix& z, const Matrix& rank_matrix,
                                              GiniParams params);

/// Standardizes then builds the correlation matrix.
GiniCorrelationMatrix gini_correlation_matrix(const DataMatrix& x, GiniParams params);

}  // namespace ginipca
