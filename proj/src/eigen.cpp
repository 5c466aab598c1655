#include "ginipca/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ginipca/errors.hpp"

namespace ginipca {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != c) acc += a(r, c) * a(r, c);
    return std::sqrt(acc);
}

// Annihilates a(p, q) with one rotation, updating a and the accumulated vectors.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const std::size_t n = a.rows();

    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

}  // namespace

Matrix symmetrize(const Matrix& gc) {
    if (gc.rows() != gc.cols()) throw DimensionError("symmetrize: matrix is not square");
    Matrix s(gc.rows(), gc.cols());
    for (std::size_t c = 0; c < gc.cols(); ++c)
        for (std::size_t r = 0; r < gc.rows(); ++r) s(r, c) = gc(r, c) + gc(c, r);
    return s;
}

EigenDecomposition symmetric_eigen(const Matrix& s, const JacobiOptions& options) {
    if (s.rows() != s.cols()) throw DimensionError("symmetric_eigen: matrix is not square");
    const std::size_t n = s.rows();

    double max_abs = 0.0;
    for (double v : s.data()) max_abs = std::max(max_abs, std::abs(v));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(s(r, c) - s(c, r)) > options.symmetry_tolerance * std::max(1.0, max_abs))
                throw ContractError("symmetric_eigen: input is not symmetric");

    Matrix a = s;
    // Exact symmetry from here on; the lower triangle wins.
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = c + 1; r < n; ++r) a(c, r) = a(r, c);
    Matrix v = Matrix::identity(n);

    const double threshold = options.tolerance * a.frobenius_norm();
    int sweeps = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (sweeps >= options.max_sweeps)
            throw NumericError("symmetric_eigen: Jacobi sweeps did not converge", sweeps);
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        ++sweeps;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.sweeps = sweeps;
    out.vectors = Matrix(n, n);
    out.lambdas.resize(n);
    out.mus.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.lambdas[k] = a(src, src);
        out.mus[k] = 0.5 * out.lambdas[k];

        // Entries equal to within roundoff count as ties.
        std::size_t pivot = 0;
        for (std::size_t r = 1; r < n; ++r)
            if (std::abs(v(r, src)) > std::abs(v(pivot, src)) * (1.0 + 1e-12)) pivot = r;
        const double sign = v(pivot, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = sign * v(r, src);
    }

    const double total = std::accumulate(out.lambdas.begin(), out.lambdas.end(), 0.0);
    out.shares.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.shares[k] = out.lambdas[k] / total;
    return out;
}

}  // namespace ginipca
