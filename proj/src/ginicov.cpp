#include "ginipca/ginicov.hpp"

#include <cmath>

#include "ginipca/errors.hpp"
#include "ginipca/kernels.hpp"

namespace ginipca {

namespace {

double gmd_scale(std::size_t n, double nu) {
    const double nd = static_cast<double>(n);
    return -2.0 * nu / (nd * (nd - 1.0));
}

double centered_dot(std::span<const double> values, std::span<const double> centered) {
    const double mean = kernels::sum(values) / static_cast<double>(values.size());
    std::vector<double> tmp(values.size());
    kernels::affine(values, mean, 1.0, tmp);
    return kernels::dot(tmp, centered);
}

}  // namespace

void GiniParams::validate() const {
    if (!(nu > 1.0)) throw ParameterError("nu must be > 1 (got " + std::to_string(nu) + ")");
}

double gmd(std::span<const double> value_side, const CenteredRankPower& rank_side) {
    if (value_side.size() != rank_side.size()) throw DimensionError("gmd: length mismatch");
    if (value_side.size() < 2) throw DimensionError("gmd: need at least 2 observations");
    return gmd_scale(value_side.size(), rank_side.nu) * centered_dot(value_side, rank_side.values);
}

double gmd(std::span<const double> value_side, std::span<const double> rank_side, GiniParams params) {
    params.validate();
    if (value_side.size() != rank_side.size()) throw DimensionError("gmd: length mismatch");
    return gmd(value_side, centered_rank_power(rank_side, params.nu));
}

double gini_correlation(std::span<const double> value_side, std::span<const double> rank_side,
                        GiniParams params) {
    const double self = gmd(value_side, value_side, params);
    if (!(self > 0.0)) throw DegenerateColumnError(0, "value side");
    return gmd(value_side, rank_side, params) / self;
}

Matrix centered_rank_matrix(const Matrix& x, GiniParams params) {
    params.validate();
    Matrix out(x.rows(), x.cols());
    for (std::size_t k = 0; k < x.cols(); ++k) {
        auto rc = centered_rank_power(x.col(k), params.nu);
        std::copy(rc.values.begin(), rc.values.end(), out.col(k).begin());
    }
    return out;
}

StandardizedMatrix gini_standardize(const DataMatrix& x, GiniParams params) {
    params.validate();
    x.validate();
    const std::size_t n = x.n_obs();
    const std::size_t k_vars = x.n_vars();

    StandardizedMatrix out;
    out.z = Matrix(n, k_vars);
    out.column_means.resize(k_vars);
    out.column_scales.resize(k_vars);
    for (std::size_t k = 0; k < k_vars; ++k) {
        auto column = x.values.col(k);
        const double mean = kernels::sum(column) / static_cast<double>(n);
        const double g = gmd(column, centered_rank_power(column, params.nu));
        if (!(g > 0.0) || !std::isfinite(g)) throw DegenerateColumnError(k, x.column_names[k]);
        out.column_means[k] = mean;
        out.column_scales[k] = g;
        kernels::affine(column, mean, 1.0 / g, out.z.col(k));
    }
    return out;
}

GiniCorrelationMatrix gini_correlation_matrix(const StandardizedMatrix& z, const Matrix& rank_matrix,
                                              GiniParams params) {
    params.validate();
    if (z.z.rows() != rank_matrix.rows() || z.z.cols() != rank_matrix.cols())
        throw DimensionError("standardized and rank matrices differ in shape");
    GiniCorrelationMatrix out;
    out.nu = params.nu;
    out.gc = transpose_times(z.z, rank_matrix);
    const double scale = gmd_scale(z.z.rows(), params.nu);
    for (double& v : out.gc.data()) v *= scale;
    return out;
}

GiniCorrelationMatrix gini_correlation_matrix(const DataMatrix& x, GiniParams params) {
    auto z = gini_standardize(x, params);
    return gini_correlation_matrix(z, centered_rank_matrix(x.values, params), params);
}

}  // namespace ginipca
