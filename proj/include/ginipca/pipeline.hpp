#pragma once

#include <string>
#include <vector>

#include "ginipca/eigen.hpp"
#include "ginipca/ginicov.hpp"
#include "ginipca/matrix.hpp"

namespace ginipca {

enum class Method { gini, variance };

/// A fitted principal component model. Immutable after fitting.
///
/// Both methods share this shape: for `Method::variance` the correlation
/// field holds the Pearson matrix, `standardized.column_scales` the population
/// standard deviations, and `rank_matrix` is empty.
struct GiniModel {
    Method method = Method::gini;
    GiniParams params;
    StandardizedMatrix standardized;
    Matrix rank_matrix;  ///< R_z^c, N x K (Gini only)
    GiniCorrelationMatrix correlation;
    EigenDecomposition eigen;
    Matrix scores;  ///< F = Z B, N x K
    std::vector<std::string> row_labels;
    std::vector<std::string> column_names;

    std::size_t n_obs() const noexcept { return scores.rows(); }
    std::size_t n_axes() const noexcept { return scores.cols(); }

    /// "gini_2", "gini_4.5", "variance".
    std::string label() const;
};

/// Standardize by mean and GMD_nu, build GC_nu(Z), decompose GC + GCᵀ and
/// project. All K axes are kept; logs a warning when N <= K.
GiniModel fit_gini_pca(const DataMatrix& x, GiniParams params);

/// Classical PCA on the Pearson correlation matrix, standardizing with the
/// population (1/N) standard deviation.
GiniModel fit_classic_pca(const DataMatrix& x);

/// Reported share of each axis, in percent, descending.
///
/// This is lambda_k / sum|lambda|, which is the usual lambda_k / sum(lambda)
/// whenever no eigenvalue is negative. On indefinite Gini matrices it keeps
/// the shares comparable to published tables.
std::vector<double> eigen_shares(const GiniModel& model);

/// Formats nu compactly: 2 -> "2", 2.5 -> "2.5".
std::string format_nu(double nu);

}  // namespace ginipca
