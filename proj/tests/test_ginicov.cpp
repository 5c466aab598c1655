#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ginipca/errors.hpp"
#include "ginipca/ginicov.hpp"
#include "ginipca/simharness.hpp"
#include "support.hpp"

using namespace ginipca;
using V = std::vector<double>;

TEST_CASE("gmd small cases") {
    CHECK(gmd(V{1, 2, 3}, V{1, 2, 3}, {2}) == doctest::Approx(4.0 / 3));
    CHECK(gmd(V{1, 2, 3}, V{10, 20, 30}, {2}) == doctest::Approx(4.0 / 3));
    CHECK(gmd(V{1, 2, 3}, V{3, 2, 1}, {2}) == doctest::Approx(-4.0 / 3));
    CHECK(gmd(V{5, 5, 5}, V{1, 2, 3}, {2}) == 0.0);
    CHECK_THROWS_AS(gmd(V{1, 2}, V{1, 2, 3}, {2}), DimensionError);
    CHECK_THROWS_AS(gmd(V{1, 2, 3}, V{1, 2, 3}, {1.0}), ParameterError);
}

TEST_CASE("gmd at nu = 2 equals the mean absolute pairwise difference") {
    CounterRng rng(11, 0);
    for (int t = 0; t < 50; ++t) {
        const auto x = test_support::normals(rng, 2 + t);
        const double oracle = test_support::pairwise_gmd(x);
        CHECK(std::fabs(gmd(x, x, {2}) - oracle) <= 1e-12 * oracle);
    }
}

TEST_CASE("gmd with ties matches the pairwise oracle under mean ranks") {
    const V x{1, 1, 2, 2, 2, 7, 7, 9};
    CHECK(gmd(x, x, {2}) == doctest::Approx(test_support::pairwise_gmd(x)).epsilon(1e-12));
}

TEST_CASE("gini_correlation is bounded and one on the diagonal") {
    CounterRng rng(12, 0);
    const auto x = test_support::normals(rng, 40);
    const auto y = test_support::normals(rng, 40);
    for (double nu : {1.5, 2.0, 4.0, 6.0}) {
        CHECK(gini_correlation(x, x, {nu}) == doctest::Approx(1.0));
        const double g = gini_correlation(x, y, {nu});
        CHECK(std::fabs(g) <= 1.0 + 1e-12);
    }
}

TEST_CASE("standardization") {
    auto x = DataMatrix::from_values(Matrix{{1}, {2}, {3}});
    const auto z = gini_standardize(x, {2});
    CHECK(z.z(0, 0) == doctest::Approx(-0.75));
    CHECK(z.z(1, 0) == doctest::Approx(0.0));
    CHECK(z.z(2, 0) == doctest::Approx(0.75));
    CHECK(z.column_means[0] == doctest::Approx(2.0));
    CHECK(z.column_scales[0] == doctest::Approx(4.0 / 3));

    // Idempotent on already standardized data.
    auto again = gini_standardize(DataMatrix::from_values(z.z), {2});
    CHECK(test_support::max_abs_diff(again.z, z.z) < 1e-14);

    auto bad = DataMatrix::from_values(Matrix{{1, 4}, {2, 4}, {3, 4}});
    bad.column_names = {"a", "flat"};
    try {
        gini_standardize(bad, {2});
        FAIL("expected DegenerateColumnError");
    } catch (const DegenerateColumnError& e) {
        CHECK(e.column() == 1);
        CHECK(std::string(e.what()).find("flat") != std::string::npos);
    }
}

TEST_CASE("correlation matrix of identical columns is all ones") {
    auto x = DataMatrix::from_values(Matrix{{1, 1}, {4, 4}, {2, 2}, {8, 8}});
    for (double nu : {2.0, 3.0}) {
        const auto gc = gini_correlation_matrix(x, {nu}).gc;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(gc(i, j) == doctest::Approx(1.0));
    }
}

TEST_CASE("correlation matrix entries follow value side row, rank side column") {
    CounterRng rng(13, 0);
    auto x = DataMatrix::from_values(test_support::random_matrix(rng, 30, 3));
    const GiniParams p{3.0};
    const auto gc = gini_correlation_matrix(x, p).gc;
    const auto z = gini_standardize(x, p);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
            CHECK(gc(k, l) == doctest::Approx(gini_correlation(z.z.col(k), z.z.col(l), p)).epsilon(1e-12));
}

TEST_CASE("statistical behaviour on Gaussian samples") {
    SUBCASE("independent columns") {
        Matrix rho = Matrix::identity(2);
        const auto x = sample_mvn(rho, 10000, 21);
        const auto gc = gini_correlation_matrix(x, {2}).gc;
        CHECK(std::fabs(gc(0, 1)) < 0.05);
        CHECK(std::fabs(gc(1, 0)) < 0.05);
    }
    SUBCASE("Pearson 0.5") {
        Matrix rho{{1, 0.5}, {0.5, 1}};
        const auto x = sample_mvn(rho, 10000, 22);
        for (double nu : {2.0, 4.0}) {
            const auto gc = gini_correlation_matrix(x, {nu}).gc;
            CHECK(std::fabs(gc(0, 1) - 0.5) < 0.05);
            CHECK(std::fabs(gc(1, 0) - 0.5) < 0.05);
            // Exchangeable margins: the two directions agree closely.
            CHECK(std::fabs(gc(0, 1) - gc(1, 0)) < 0.03);
        }
    }
}
