#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ginipca/kernels.hpp"
#include "support.hpp"

using namespace ginipca;

namespace {

struct Variant {
    const char* name;
    double (*dot)(std::span<const double>, std::span<const double>) noexcept;
    double (*sum)(std::span<const double>) noexcept;
    void (*axpy)(double, std::span<const double>, std::span<double>) noexcept;
    void (*affine)(std::span<const double>, double, double, std::span<double>) noexcept;
};

std::vector<Variant> accelerated() {
    std::vector<Variant> v;
#if defined(GINIPCA_HAVE_AVX2)
    if (kernels::detect_backend() == kernels::Backend::avx2)
        v.push_back({"avx2", kernels::avx2::dot, kernels::avx2::sum, kernels::avx2::axpy, kernels::avx2::affine});
#endif
#if defined(GINIPCA_HAVE_NEON)
    v.push_back({"neon", kernels::neon::dot, kernels::neon::sum, kernels::neon::axpy, kernels::neon::affine});
#endif
    return v;
}

double abs_dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] * b[i]);
    return s;
}

}  // namespace

TEST_CASE("scalar kernels on small exact inputs") {
    const std::vector<double> a{1, 2, 3, 4, 5};
    const std::vector<double> b{2, 0, -1, 1, 0.5};
    CHECK(kernels::scalar::dot(a, b) == doctest::Approx(5.5));
    CHECK(kernels::scalar::sum(a) == 15.0);
    std::vector<double> y{1, 1, 1, 1, 1};
    kernels::scalar::axpy(2.0, a, y);
    CHECK(y == std::vector<double>{3, 5, 7, 9, 11});
    std::vector<double> out(5);
    kernels::scalar::affine(a, 3.0, 0.5, out);
    CHECK(out == std::vector<double>{-1, -0.5, 0, 0.5, 1});
    CHECK(kernels::scalar::dot(std::span<const double>{}, std::span<const double>{}) == 0.0);
}

TEST_CASE("accelerated kernels match the scalar reference for every length and alignment") {
    const auto variants = accelerated();
    if (variants.empty()) MESSAGE("no accelerated backend on this machine; scalar only");
    CounterRng rng(99, 0);
    for (const auto& v : variants) {
        CAPTURE(v.name);
        for (std::size_t n = 0; n <= 67; ++n) {
            for (std::size_t offset = 0; offset < 3; ++offset) {
                CAPTURE(n);
                CAPTURE(offset);
                auto a = test_support::normals(rng, n + offset);
                auto b = test_support::normals(rng, n + offset);
                std::span<const double> sa(a.data() + offset, n), sb(b.data() + offset, n);
                const std::vector<double> va(sa.begin(), sa.end()), vb(sb.begin(), sb.end());
                const double scale = abs_dot(va, vb) + 1.0;
                CHECK(std::fabs(v.dot(sa, sb) - kernels::scalar::dot(sa, sb)) <= 1e-14 * scale);
                CHECK(std::fabs(v.sum(sa) - kernels::scalar::sum(sa)) <= 1e-14 * (abs_dot(va, std::vector<double>(n, 1.0)) + 1.0));

                std::vector<double> y1(vb), y2(vb);
                kernels::scalar::axpy(-0.75, sa, y1);
                v.axpy(-0.75, sa, y2);
                for (std::size_t i = 0; i < n; ++i) CHECK(std::fabs(y1[i] - y2[i]) <= 1e-15 * (1 + std::fabs(y1[i])));

                std::vector<double> o1(n), o2(va);
                kernels::scalar::affine(sa, 0.3, 1.7, o1);
                v.affine(o2, 0.3, 1.7, o2);  // in-place
                for (std::size_t i = 0; i < n; ++i) CHECK(o1[i] == o2[i]);
            }
        }
    }
}

TEST_CASE("dispatch honours explicit backend selection") {
    const auto original = kernels::active_backend();
    REQUIRE(kernels::set_backend(kernels::Backend::scalar));
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    const std::vector<double> a{1, 2, 3};
    CHECK(kernels::dot(a, a) == 14.0);
#if !defined(GINIPCA_HAVE_NEON)
    CHECK_FALSE(kernels::set_backend(kernels::Backend::neon));
#endif
    kernels::set_backend(original);
    CHECK(kernels::active_backend() == original);
    CHECK(kernels::backend_name(kernels::Backend::scalar) == "scalar");
}
