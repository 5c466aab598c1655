#include "ginipca/simharness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "ginipca/diagnostics.hpp"
#include "ginipca/eigen.hpp"
#include "ginipca/errors.hpp"
#include "ginipca/log.hpp"

namespace ginipca {

namespace {

// Aggregation block: iterations inside a block are summed in index order, and
// blocks are combined by pairwise summation in block order.
constexpr std::size_t kBlock = 8;

struct Accumulator {
    std::vector<double> shares;  // method x axis
    std::vector<double> eigen;   // method x axis
    std::vector<double> act;     // method x tracked axis x N
    std::vector<double> rct;

    Accumulator(std::size_t methods, std::size_t k, std::size_t tracked, std::size_t n)
        : shares(methods * k, 0.0),
          eigen(methods * k, 0.0),
          act(methods * tracked * n, 0.0),
          rct(methods * tracked * n, 0.0) {}

    void add(const Accumulator& other) {
        auto plus = [](std::vector<double>& a, const std::vector<double>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        };
        plus(shares, other.shares);
        plus(eigen, other.eigen);
        plus(act, other.act);
        plus(rct, other.rct);
    }
};

struct MethodSpec {
    Method method;
    double nu;
};

GiniModel fit(const MethodSpec& m, const DataMatrix& x) {
    return m.method == Method::variance ? fit_classic_pca(x) : fit_gini_pca(x, GiniParams{m.nu});
}

double sample_sd(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

Accumulator pairwise_total(std::vector<Accumulator>& blocks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return blocks[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    Accumulator left = pairwise_total(blocks, lo, mid);
    left.add(pairwise_total(blocks, mid, hi));
    return left;
}

}  // namespace

SimConfig SimConfig::concentrated() {
    SimConfig c;
    c.rho = Matrix{{1.0, 0.8, 0.9, 0.7},
                   {0.8, 1.0, 0.8, 0.75},
                   {0.9, 0.8, 1.0, 0.6},
                   {0.7, 0.75, 0.6, 1.0}};
    c.theta_grid = full_grid();
    return c;
}

SimConfig SimConfig::dispersed() {
    SimConfig c;
    // As printed: entry (2,4) = 1 but (4,2) = 0. repair_correlation resolves it.
    c.rho = Matrix{{1.0, -0.5, 0.25, 0.5},
                   {-0.5, 1.0, -0.9, 1.0},
                   {0.25, -0.9, 1.0, -0.25},
                   {0.5, 0.0, -0.25, 1.0}};
    c.theta_grid = full_grid();
    return c;
}

std::vector<double> SimConfig::full_grid() {
    std::vector<double> g(1000);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<double>(i + 1);
    return g;
}

std::vector<double> SimConfig::reduced_grid() {
    std::vector<double> g;
    for (int t = 1; t <= 991; t += 10) g.push_back(t);
    return g;
}

void SimConfig::validate() const {
    if (rho.rows() == 0 || rho.rows() != rho.cols()) throw ParameterError("rho must be square and non-empty");
    if (n_obs < 2) throw ParameterError("n_obs must be >= 2");
    if (theta_grid.empty()) throw ParameterError("theta_grid is empty");
    for (double t : theta_grid)
        if (!(t >= 1.0) || !std::isfinite(t)) throw ParameterError("theta values must be >= 1");
    for (double nu : nus)
        if (!(nu > 1.0)) throw ParameterError("nu values must be > 1");
    if (axes_tracked > rho.rows()) throw ParameterError("axes_tracked exceeds the number of variables");
}

double mse(std::span<const double> observed, std::span<const double> reference) {
    if (observed.size() != reference.size()) throw DimensionError("mse: length mismatch");
    if (observed.empty()) throw DimensionError("mse: empty input");
    double acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double d = observed[i] - reference[i];
        acc += d * d;
    }
    return acc / static_cast<double>(observed.size());
}

Matrix cholesky_psd(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("cholesky: matrix is not square");
    const std::size_t n = a.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
    const double tol = 1e-10 * std::max(scale, 1.0);

    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (d < -tol) throw ParameterError("matrix is not positive semi-definite");
        if (d <= tol) continue;  // zero column
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

Matrix nearest_correlation(const Matrix& a, double tolerance, int max_iterations, int* iterations) {
    if (a.rows() != a.cols()) throw DimensionError("nearest_correlation: matrix is not square");
    const std::size_t n = a.rows();
    Matrix y = a;
    Matrix ds(n, n);
    for (int it = 1; it <= max_iterations; ++it) {
        Matrix r = y;
        for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= ds.data()[i];

        // Project onto the PSD cone.
        const auto e = symmetric_eigen(r);
        Matrix x(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            const double lam = std::max(e.lambdas[k], 0.0);
            if (lam == 0.0) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t rr = 0; rr <= c; ++rr)
                    x(rr, c) += lam * e.vectors(rr, k) * e.vectors(c, k);
        }
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t rr = c + 1; rr < n; ++rr) x(rr, c) = x(c, rr);
        for (std::size_t i = 0; i < ds.data().size(); ++i) ds.data()[i] = x.data()[i] - r.data()[i];

        Matrix next = x;
        for (std::size_t i = 0; i < n; ++i) next(i, i) = 1.0;

        double diff = 0.0;
        for (std::size_t i = 0; i < next.data().size(); ++i) {
            const double d = next.data()[i] - x.data()[i];
            diff += d * d;
        }
        y = std::move(next);
        if (std::sqrt(diff) <= tolerance * y.frobenius_norm()) {
            if (iterations) *iterations = it;
            return y;
        }
    }
    throw NumericError("nearest_correlation did not converge", max_iterations);
}

RepairedRho repair_correlation(const Matrix& rho, RhoRepair which) {
    if (rho.rows() != rho.cols()) throw DimensionError("rho must be square");
    const std::size_t n = rho.rows();
    RepairedRho out;
    out.rho = rho;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(rho(i, i) - 1.0) > 1e-12) throw ParameterError("rho must have a unit diagonal");

    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = c + 1; r < n; ++r) {
            if (rho(r, c) == rho(c, r)) continue;
            out.symmetrized = true;
            const double v = which == RhoRepair::lower ? rho(r, c) : rho(c, r);
            out.rho(r, c) = v;
            out.rho(c, r) = v;
        }
    }
    if (out.symmetrized)
        log::warn(std::string("rho is asymmetric; mirrored its ") +
                  (which == RhoRepair::lower ? "lower" : "upper") + " triangle");

    const auto e = symmetric_eigen(out.rho);
    if (e.lambdas.back() < 0.0) {
        out.rho = nearest_correlation(out.rho, 1e-10, 10000, &out.projection_iterations);
        out.projected = true;
        log::warn("rho is indefinite; projected to the nearest correlation matrix in " +
                  std::to_string(out.projection_iterations) + " iterations");

        // The projection lands on the boundary of the PSD cone, where rounding
        // can leave eigenvalues a hair below zero. Blend with the identity just
        // enough to lift the smallest one to a small positive margin.
        constexpr double margin = 1e-12;
        const double low = symmetric_eigen(out.rho).lambdas.back();
        if (low < margin) {
            const double t = (margin - low) / (1.0 - low);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) out.rho(r, c) = r == c ? 1.0 : (1.0 - t) * out.rho(r, c);
        }
    }
    return out;
}

DataMatrix sample_mvn(const Matrix& rho, std::size_t n, CounterRng& rng) {
    const Matrix l = cholesky_psd(rho);
    const std::size_t k = rho.rows();
    Matrix x(n, k);
    std::vector<double> z(k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) z[j] = rng.normal();
        for (std::size_t r = 0; r < k; ++r) {
            double s = 0.0;
            for (std::size_t j = 0; j <= r; ++j) s += l(r, j) * z[j];
            x(i, r) = s;
        }
    }
    return DataMatrix::from_values(std::move(x));
}

DataMatrix sample_mvn(const Matrix& rho, std::size_t n, std::uint64_t seed) {
    CounterRng rng(seed, 0);
    return sample_mvn(rho, n, rng);
}

DataMatrix contaminate(const DataMatrix& x, double theta, std::size_t row) {
    if (row >= x.n_obs())
        throw DimensionError("contaminate: row " + std::to_string(row) + " out of range");
    if (!(theta >= 1.0)) throw ParameterError("contaminate: theta must be >= 1");
    DataMatrix out = x;
    for (std::size_t c = 0; c < out.n_vars(); ++c) out.values(row, c) *= theta;
    return out;
}

SimReport run_algorithm1(const SimConfig& config, unsigned jobs) {
    config.validate();
    SimReport report;
    report.repair = repair_correlation(config.rho, config.rho_repair);
    report.config_echo = config;
    report.config_echo.rho = report.repair.rho;

    std::vector<MethodSpec> specs;
    for (double nu : config.nus) specs.push_back({Method::gini, nu});
    specs.push_back({Method::variance, 2.0});

    const std::size_t n_methods = specs.size();
    const std::size_t k = config.rho.rows();
    const std::size_t tracked = config.axes_tracked;
    const std::size_t n = config.n_obs;
    const std::size_t iters = config.theta_grid.size();
    const std::size_t n_blocks = (iters + kBlock - 1) / kBlock;
    const Matrix& rho = report.repair.rho;

    std::vector<Accumulator> blocks(n_blocks, Accumulator(n_methods, k, tracked, n));
    std::vector<std::exception_ptr> failures(n_blocks);
    std::vector<std::size_t> failed_at(n_blocks, 0);

    auto run_block = [&](std::size_t b) {
        Accumulator& acc = blocks[b];
        const std::size_t end = std::min(iters, (b + 1) * kBlock);
        for (std::size_t t = b * kBlock; t < end; ++t) {
            try {
                CounterRng rng(config.seed, t + 1);
                const DataMatrix clean = sample_mvn(rho, n, rng);
                const std::size_t row = static_cast<std::size_t>(rng.below(n));
                const DataMatrix dirty = contaminate(clean, config.theta_grid[t], row);

                for (std::size_t m = 0; m < n_methods; ++m) {
                    const GiniModel ref = fit(specs[m], clean);
                    const GiniModel obs = fit(specs[m], dirty);
                    const auto ref_shares = eigen_shares(ref);
                    const auto obs_shares = eigen_shares(obs);
                    for (std::size_t a = 0; a < k; ++a) {
                        const double d = obs_shares[a] - ref_shares[a];
                        acc.shares[m * k + a] += ref_shares[a];
                        acc.eigen[m * k + a] += d * d;
                    }
                    const Matrix ref_act = act(ref);
                    const Matrix obs_act = act(obs);
                    const Matrix ref_rct = rct(ref);
                    const Matrix obs_rct = rct(obs);
                    for (std::size_t a = 0; a < tracked; ++a) {
                        double* act_out = acc.act.data() + (m * tracked + a) * n;
                        double* rct_out = acc.rct.data() + (m * tracked + a) * n;
                        for (std::size_t i = 0; i < n; ++i) {
                            const double da = 100.0 * (obs_act(i, a) - ref_act(i, a));
                            const double dr = 100.0 * (obs_rct(i, a) - ref_rct(i, a));
                            act_out[i] += da * da;
                            rct_out[i] += dr * dr;
                        }
                    }
                }
            } catch (...) {
                failures[b] = std::current_exception();
                failed_at[b] = t;
                return;
            }
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n_blocks));
    if (workers == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t b = w; b < n_blocks; b += workers) run_block(b);
            });
    }

    for (std::size_t b = 0; b < n_blocks; ++b) {
        if (!failures[b]) continue;
        const double theta = config.theta_grid[failed_at[b]];
        try {
            std::rethrow_exception(failures[b]);
        } catch (const NumericError& e) {
            throw NumericError("simulation failed at theta = " + format_nu(theta) + ": " + e.what(),
                               e.iterations());
        } catch (const std::exception& e) {
            throw Error("simulation failed at theta = " + format_nu(theta) + ": " + e.what());
        }
    }

    const Accumulator total = pairwise_total(blocks, 0, n_blocks);
    const double denom = static_cast<double>(iters);
    report.replications = iters;
    for (std::size_t m = 0; m < n_methods; ++m) {
        MethodSeries s;
        s.method = specs[m].method;
        s.nu = specs[m].nu;
        s.label = s.method == Method::variance ? "variance" : "gini_" + format_nu(s.nu);
        for (std::size_t a = 0; a < k; ++a) {
            s.mean_shares.push_back(total.shares[m * k + a] / denom);
            s.mse_eigen.push_back(total.eigen[m * k + a] / denom);
        }
        for (std::size_t a = 0; a < tracked; ++a) {
            const double* act_src = total.act.data() + (m * tracked + a) * n;
            const double* rct_src = total.rct.data() + (m * tracked + a) * n;
            std::vector<double> act_row(n);
            std::vector<double> rct_row(n);
            for (std::size_t i = 0; i < n; ++i) {
                act_row[i] = act_src[i] / denom;
                rct_row[i] = rct_src[i] / denom;
            }
            s.sd_mse_act.push_back(sample_sd(act_row));
            s.mse_act.push_back(std::move(act_row));
            s.mse_rct.push_back(std::move(rct_row));
        }
        report.methods.push_back(std::move(s));
    }
    return report;
}

}  // namespace ginipca
