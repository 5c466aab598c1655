#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ginipca/diagnostics.hpp"
#include "ginipca/errors.hpp"
#include "ginipca/io.hpp"
#include "support.hpp"

using namespace ginipca;
using V = std::vector<double>;

TEST_CASE("single-column model") {
    const auto x = DataMatrix::from_values(Matrix{{1}, {2}, {3}});
    const auto m = fit_gini_pca(x, {2});
    CHECK(m.eigen.mus[0] == doctest::Approx(1.0));
    CHECK(ggmd(m, 0) == doctest::Approx(1.0));
    const Matrix a = act(m);
    CHECK(a(0, 0) == doctest::Approx(0.5));
    CHECK(a(1, 0) == doctest::Approx(0.0));
    CHECK(a(2, 0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ggmd(m, 1), DimensionError);
}

TEST_CASE("relative contributions") {
    const Matrix r = relative_contributions(Matrix{{3, -1}, {0, 5}, {0, 0}});
    CHECK(r(0, 0) == doctest::Approx(0.75));
    CHECK(r(0, 1) == doctest::Approx(0.25));
    CHECK(r(1, 0) == 0.0);
    CHECK(r(1, 1) == 1.0);
    CHECK(std::isnan(r(2, 0)));
    CHECK(std::isnan(r(2, 1)));
}

TEST_CASE("ACT of the variance model is the squared-score share") {
    CounterRng rng(51, 0);
    const auto m = fit_classic_pca(DataMatrix::from_values(test_support::random_matrix(rng, 30, 3)));
    const Matrix a = act(m);
    for (std::size_t k = 0; k < 3; ++k) {
        double ss = 0;
        for (std::size_t i = 0; i < 30; ++i) ss += m.scores(i, k) * m.scores(i, k);
        for (std::size_t i = 0; i < 30; ++i) CHECK(a(i, k) == doctest::Approx(m.scores(i, k) * m.scores(i, k) / ss));
    }
}

TEST_CASE("degenerate axes give undefined ACT columns") {
    const auto x = DataMatrix::from_values(Matrix{{1, 1}, {3, 3}, {2, 2}, {7, 7}});
    const Matrix a = act(fit_gini_pca(x, {2}));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::isnan(a(i, 1)));
}

TEST_CASE("cars axis correlations and U-tests") {
    const auto cars = cars_dataset();
    const auto m2 = fit_gini_pca(cars, {2});
    const Matrix v = axis_variable_correlations(m2);
    const double s1 = v(0, 0) < 0 ? -1.0 : 1.0;  // eigenvector sign is a convention
    CHECK(s1 * v(0, 0) == doctest::Approx(0.974).epsilon(0.001));
    const V axis1{0.974, 0.945, 0.873, 0.761, 0.934, 0.824};
    for (std::size_t j = 0; j < 6; ++j) CHECK(s1 * v(0, j) == doctest::Approx(axis1[j]).epsilon(0.002));

    const auto u = u_stat_test(m2, 0, 0);
    CHECK(std::fabs(u.z) == doctest::Approx(56.416).epsilon(1e-4));
    CHECK(u.p < 0.05);
    const auto w = u_stat_test(m2, 1, 3);
    CHECK(std::fabs(w.z) == doctest::Approx(2.897).epsilon(1e-3));
    CHECK(significance_class(w.p) == "5%");

    const auto m4 = fit_gini_pca(cars, {4});
    CHECK(std::fabs(axis_variable_correlations(m4)(1, 2)) == doctest::Approx(0.516).epsilon(0.002));
}

TEST_CASE("axis statistic of a variable against itself") {
    CounterRng rng(52, 0);
    const auto f = test_support::normals(rng, 25);
    CHECK(axis_statistic(f, f, Method::gini, 2) == doctest::Approx(1.0));
    CHECK(axis_statistic(f, f, Method::gini, 5) == doctest::Approx(1.0));
    CHECK(axis_statistic(f, f, Method::variance, 2) == doctest::Approx(1.0));
    const V flat(25, 1.0);
    CHECK(std::isnan(axis_statistic(flat, f, Method::gini, 2)));
}

TEST_CASE("U-test edge cases") {
    const V x{1, 2, 3, 4, 5};
    CHECK_THROWS_AS(u_statistic_test(x, x, Method::gini, 2), DimensionError);

    CHECK_THROWS_AS(significance(fit_gini_pca(DataMatrix::from_values(Matrix{{1}, {2}, {4}}), {2}), 0, 4),
                    DimensionError);
    // A perfectly linear relation has a zero jackknife spread.
    V a(12), b(12);
    for (std::size_t i = 0; i < 12; ++i) {
        a[i] = static_cast<double>(i);
        b[i] = 2.0 * static_cast<double>(i) + 1;
    }
    const auto r = u_statistic_test(a, b, Method::gini, 2);
    CHECK(r.u == doctest::Approx(1.0));
    CHECK(r.se == doctest::Approx(0.0).epsilon(1e-12).scale(1e-12));
    CHECK(r.p < 1e-6);
    CHECK(significance_class(0.2) == "");
    CHECK(significance_class(0.07) == "10%");
    CHECK(significance_class(0.01) == "5%");
}

TEST_CASE("significance table is independent of the number of jobs") {
    const auto m = fit_gini_pca(cars_dataset(), {2});
    const auto one = significance(m, 3, 1);
    const auto four = significance(m, 3, 4);
    CHECK(one.z == four.z);
    CHECK(one.u.rows() == 3);
    CHECK(one.u.cols() == 6);
    CHECK(one.act_tilde == four.act_tilde);
}

TEST_CASE("act_tilde normalizes each column") {
    const Matrix t = act_tilde(Matrix{{3, 0, 0}, {4, -2, 0}});
    CHECK(t(0, 0) == doctest::Approx(0.6));
    CHECK(t(1, 0) == doctest::Approx(0.8));
    CHECK(t(0, 1) == 0.0);
    CHECK(t(1, 1) == doctest::Approx(-1.0));
    CHECK(std::isnan(t(0, 2)));
}

TEST_CASE("contribution tables sum to one") {
    CounterRng rng(53, 0);
    for (int t = 0; t < 5; ++t) {
        const auto x = DataMatrix::from_values(test_support::random_matrix(rng, 40, 4));
        for (const auto& m : {fit_gini_pca(x, {2}), fit_gini_pca(x, {4}), fit_classic_pca(x)}) {
            const auto c = contributions(m);
            for (std::size_t k = 0; k < 4; ++k) {
                double s = 0;
                for (std::size_t i = 0; i < 40; ++i) s += c.act(i, k);
                CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
                CHECK(c.axis_ggmd[k] == doctest::Approx(m.eigen.mus[k]).epsilon(1e-9));
            }
            for (std::size_t i = 0; i < 40; ++i) {
                double s = 0;
                for (std::size_t k = 0; k < 4; ++k) s += c.rct(i, k);
                CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
            }
        }
    }
}
