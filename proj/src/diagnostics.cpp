#include "ginipca/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "ginipca/errors.hpp"
#include "ginipca/ginicov.hpp"
#include "ginipca/kernels.hpp"
#include "ginipca/ranks.hpp"

namespace ginipca {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_axis(const GiniModel& model, std::size_t axis) {
    if (axis >= model.n_axes())
        throw DimensionError("axis " + std::to_string(axis) + " out of range (K = " +
                             std::to_string(model.n_axes()) + ")");
}

// psi_k = R_z^c b_k, the rank-side companion of axis k.
std::vector<double> rank_projection(const GiniModel& model, std::size_t axis) {
    std::vector<double> psi(model.n_obs(), 0.0);
    for (std::size_t l = 0; l < model.rank_matrix.cols(); ++l)
        kernels::axpy(model.eigen.vectors(l, axis), model.rank_matrix.col(l), psi);
    return psi;
}

double gmd_scale(std::size_t n, double nu) {
    const double nd = static_cast<double>(n);
    return -2.0 * nu / (nd * (nd - 1.0));
}

double pearson(std::span<const double> a, std::span<const double> b) {
    const double n = static_cast<double>(a.size());
    const double ma = kernels::sum(a) / n;
    const double mb = kernels::sum(b) / n;
    std::vector<double> ca(a.size());
    std::vector<double> cb(b.size());
    kernels::affine(a, ma, 1.0, ca);
    kernels::affine(b, mb, 1.0, cb);
    const double saa = kernels::dot(ca, ca);
    const double sbb = kernels::dot(cb, cb);
    if (!(saa > 0.0) || !(sbb > 0.0)) return kNaN;
    return kernels::dot(ca, cb) / std::sqrt(saa * sbb);
}

}  // namespace

double ggmd(const GiniModel& model, std::size_t axis) {
    check_axis(model, axis);
    auto f = model.scores.col(axis);
    if (model.method == Method::variance) return kernels::dot(f, f) / static_cast<double>(f.size());
    const auto psi = rank_projection(model, axis);
    return gmd_scale(model.n_obs(), model.params.nu) * kernels::dot(f, psi);
}

Matrix act(const GiniModel& model) {
    const std::size_t n = model.n_obs();
    Matrix out(n, model.n_axes());
    for (std::size_t k = 0; k < model.n_axes(); ++k) {
        auto f = model.scores.col(k);
        std::vector<double> terms(n);
        if (model.method == Method::variance) {
            for (std::size_t i = 0; i < n; ++i) terms[i] = f[i] * f[i];
        } else {
            const auto psi = rank_projection(model, k);
            for (std::size_t i = 0; i < n; ++i) terms[i] = f[i] * psi[i];
        }
        double total = 0.0;
        double magnitude = 0.0;
        for (double t : terms) {
            total += t;
            magnitude += std::abs(t);
        }
        auto col = out.col(k);
        if (magnitude == 0.0 || std::abs(total) <= 1e-12 * magnitude) {
            std::fill(col.begin(), col.end(), kNaN);
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) col[i] = terms[i] / total;
    }
    return out;
}

Matrix relative_contributions(const Matrix& scores) {
    Matrix out(scores.rows(), scores.cols());
    for (std::size_t i = 0; i < scores.rows(); ++i) {
        double denom = 0.0;
        for (std::size_t k = 0; k < scores.cols(); ++k) denom += std::abs(scores(i, k));
        for (std::size_t k = 0; k < scores.cols(); ++k)
            out(i, k) = denom > 0.0 ? std::abs(scores(i, k)) / denom : kNaN;
    }
    return out;
}

Matrix rct(const GiniModel& model) { return relative_contributions(model.scores); }

ContributionTable contributions(const GiniModel& model) {
    ContributionTable t;
    t.act = act(model);
    t.rct = rct(model);
    t.axis_ggmd.resize(model.n_axes());
    for (std::size_t k = 0; k < model.n_axes(); ++k) t.axis_ggmd[k] = ggmd(model, k);
    return t;
}

double axis_statistic(std::span<const double> axis, std::span<const double> variable, Method method,
                      double nu) {
    if (axis.size() != variable.size()) throw DimensionError("axis_statistic: length mismatch");
    if (method == Method::variance) return pearson(axis, variable);
    const double self = gmd(axis, centered_rank_power(axis, nu));
    if (!(self > 0.0)) return kNaN;
    return gmd(axis, centered_rank_power(variable, nu)) / self;
}

Matrix axis_variable_correlations(const GiniModel& model) {
    const std::size_t k_axes = model.n_axes();
    const std::size_t k_vars = model.standardized.z.cols();
    Matrix v(k_axes, k_vars);
    for (std::size_t k = 0; k < k_axes; ++k)
        for (std::size_t l = 0; l < k_vars; ++l)
            v(k, l) = axis_statistic(model.scores.col(k), model.standardized.z.col(l), model.method,
                                     model.params.nu);
    return v;
}

UTestResult u_statistic_test(std::span<const double> axis, std::span<const double> variable,
                             Method method, double nu) {
    const std::size_t n = axis.size();
    if (variable.size() != n) throw DimensionError("u_statistic_test: length mismatch");
    if (n < 10) throw DimensionError("u_statistic_test: jackknife needs N >= 10");
    if (method == Method::gini && !(nu > 1.0)) throw ParameterError("nu must be > 1");

    UTestResult r;
    r.u = axis_statistic(axis, variable, method, nu);

    std::vector<double> loo(n);
    std::vector<double> fa(n - 1);
    std::vector<double> va(n - 1);
    for (std::size_t drop = 0; drop < n; ++drop) {
        for (std::size_t i = 0, j = 0; i < n; ++i) {
            if (i == drop) continue;
            fa[j] = axis[i];
            va[j] = variable[i];
            ++j;
        }
        loo[drop] = axis_statistic(fa, va, method, nu);
    }
    const double nd = static_cast<double>(n);
    double mean = 0.0;
    for (double v : loo) mean += v;
    mean /= nd;
    double ss = 0.0;
    for (double v : loo) ss += (v - mean) * (v - mean);
    r.se = std::sqrt((nd - 1.0) / nd * ss);

    if (std::isnan(r.u) || std::isnan(r.se)) {
        r.z = kNaN;
        r.p = kNaN;
    } else if (r.se > 0.0) {
        r.z = r.u / r.se;
        r.p = std::erfc(std::abs(r.z) / std::sqrt(2.0));
    } else if (r.u != 0.0) {
        r.z = std::copysign(std::numeric_limits<double>::infinity(), r.u);
        r.p = 0.0;
    } else {
        r.z = 0.0;
        r.p = 1.0;
    }
    return r;
}

UTestResult u_stat_test(const GiniModel& model, std::size_t axis, std::size_t variable) {
    check_axis(model, axis);
    if (variable >= model.standardized.z.cols())
        throw DimensionError("variable " + std::to_string(variable) + " out of range");
    return u_statistic_test(model.scores.col(axis), model.standardized.z.col(variable), model.method,
                            model.params.nu);
}

SignificanceTable significance(const GiniModel& model, std::size_t n_axes, unsigned jobs) {
    if (model.n_obs() < 10) throw DimensionError("significance: jackknife needs N >= 10");
    const std::size_t h = (n_axes == 0 || n_axes > model.n_axes()) ? model.n_axes() : n_axes;
    const std::size_t k_vars = model.standardized.z.cols();
    SignificanceTable t;
    t.u = Matrix(h, k_vars);
    t.se = Matrix(h, k_vars);
    t.z = Matrix(h, k_vars);
    t.p = Matrix(h, k_vars);

    const std::size_t cells = h * k_vars;
    auto run = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t c = begin; c < cells; c += stride) {
            const std::size_t axis = c / k_vars;
            const std::size_t var = c % k_vars;
            const auto r = u_stat_test(model, axis, var);
            t.u(axis, var) = r.u;
            t.se(axis, var) = r.se;
            t.z(axis, var) = r.z;
            t.p(axis, var) = r.p;
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, cells));
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    }
    t.act_tilde = act_tilde(t.u);
    return t;
}

Matrix act_tilde(const Matrix& u) {
    Matrix out(u.rows(), u.cols());
    for (std::size_t k = 0; k < u.cols(); ++k) {
        auto col = u.col(k);
        const double norm = std::sqrt(kernels::dot(col, col));
        for (std::size_t l = 0; l < u.rows(); ++l)
            out(l, k) = (norm > 0.0 && std::isfinite(norm)) ? col[l] / norm : kNaN;
    }
    return out;
}

std::string significance_class(double p) {
    if (p < 0.05) return "5%";
    if (p < 0.10) return "10%";
    return "";
}

}  // namespace ginipca
