#include "ginipca/pipeline.hpp"

#include <cmath>
#include <cstdio>

#include "ginipca/errors.hpp"
#include "ginipca/kernels.hpp"
#include "ginipca/log.hpp"

namespace ginipca {

namespace {

void warn_if_wide(const DataMatrix& x) {
    if (x.n_obs() <= x.n_vars()) {
        log::warn("N = " + std::to_string(x.n_obs()) + " <= K = " + std::to_string(x.n_vars()) +
                  "; ranks carry little information");
    }
}

void finish(GiniModel& model, const Matrix& symmetric) {
    model.eigen = symmetric_eigen(symmetric);
    model.scores = multiply(model.standardized.z, model.eigen.vectors);
}

}  // namespace

std::string format_nu(double nu) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", nu);
    return buf;
}

std::string GiniModel::label() const {
    return method == Method::variance ? "variance" : "gini_" + format_nu(params.nu);
}

GiniModel fit_gini_pca(const DataMatrix& x, GiniParams params) {
    params.validate();
    x.validate();
    warn_if_wide(x);

    GiniModel model;
    model.method = Method::gini;
    model.params = params;
    model.row_labels = x.row_labels;
    model.column_names = x.column_names;
    model.standardized = gini_standardize(x, params);
    model.rank_matrix = centered_rank_matrix(x.values, params);
    model.correlation = gini_correlation_matrix(model.standardized, model.rank_matrix, params);
    finish(model, symmetrize(model.correlation.gc));
    return model;
}

GiniModel fit_classic_pca(const DataMatrix& x) {
    x.validate();
    warn_if_wide(x);
    const std::size_t n = x.n_obs();
    const std::size_t k_vars = x.n_vars();
    const double nd = static_cast<double>(n);

    GiniModel model;
    model.method = Method::variance;
    model.params = GiniParams{2.0};
    model.row_labels = x.row_labels;
    model.column_names = x.column_names;

    auto& st = model.standardized;
    st.z = Matrix(n, k_vars);
    st.column_means.resize(k_vars);
    st.column_scales.resize(k_vars);
    for (std::size_t k = 0; k < k_vars; ++k) {
        auto column = x.values.col(k);
        const double mean = kernels::sum(column) / nd;
        auto zc = st.z.col(k);
        kernels::affine(column, mean, 1.0, zc);
        const double sd = std::sqrt(kernels::dot(zc, zc) / nd);
        if (!(sd > 0.0) || !std::isfinite(sd)) throw DegenerateColumnError(k, x.column_names[k]);
        kernels::affine(zc, 0.0, 1.0 / sd, zc);
        st.column_means[k] = mean;
        st.column_scales[k] = sd;
    }

    model.correlation.nu = 2.0;
    model.correlation.gc = transpose_times(st.z, st.z);
    for (double& v : model.correlation.gc.data()) v /= nd;
    finish(model, symmetrize(model.correlation.gc));
    return model;
}

std::vector<double> eigen_shares(const GiniModel& model) {
    double total = 0.0;
    for (double l : model.eigen.lambdas) total += std::abs(l);
    std::vector<double> out(model.eigen.lambdas.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = 100.0 * model.eigen.lambdas[k] / total;
    return out;
}

}  // namespace ginipca
