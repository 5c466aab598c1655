#pragma once

#include <vector>

#include "ginipca/matrix.hpp"

namespace ginipca {

/// Eigenpairs of a symmetric matrix, sorted by decreasing eigenvalue.
///
/// For the Gini pipeline the decomposed matrix is S = GC + GCᵀ, so `mus`
/// (lambda / 2) are the quadratic-form values bᵀ GC b. S need not be positive
/// semi-definite, hence `shares` can carry negative entries.
struct EigenDecomposition {
    std::vector<double> lambdas;
    std::vector<double> mus;
    Matrix vectors;  ///< column k is b_k
    std::vector<double> shares;  ///< lambda_k / sum(lambda); sums to one
    int sweeps = 0;
};

struct JacobiOptions {
    int max_sweeps = 100;
    /// Converged once the off-diagonal Frobenius mass drops below tol * ||S||_F.
    double tolerance = 1e-14;
    /// Accepted asymmetry max|S - Sᵀ| relative to max(1, max|S|).
    double symmetry_tolerance = 1e-12;
};

/// Returns GC + GCᵀ. Throws DimensionError for non-square input.
Matrix symmetrize(const Matrix& gc);

/// Cyclic Jacobi eigen-solver for a symmetric matrix.
///
/// Each eigenvector is oriented so that its largest-magnitude entry is
/// positive (lowest index wins ties). Equal eigenvalues keep their
/// diagonal order. Throws ContractError on asymmetric input and NumericError
/// (with the sweep count) when the rotation sweeps do not converge.
EigenDecomposition symmetric_eigen(const Matrix& s, const JacobiOptions& options = {});

}  // namespace ginipca
