#include "ginipca/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace ginipca::kernels {

namespace {

struct Table {
    double (*dot)(std::span<const double>, std::span<const double>) noexcept;
    double (*sum)(std::span<const double>) noexcept;
    void (*axpy)(double, std::span<const double>, std::span<double>) noexcept;
    void (*affine)(std::span<const double>, double, double, std::span<double>) noexcept;
};

constexpr Table kScalar{&scalar::dot, &scalar::sum, &scalar::axpy, &scalar::affine};
#if defined(GINIPCA_HAVE_AVX2)
constexpr Table kAvx2{&avx2::dot, &avx2::sum, &avx2::axpy, &avx2::affine};
#endif
#if defined(GINIPCA_HAVE_NEON)
constexpr Table kNeon{&neon::dot, &neon::sum, &neon::axpy, &neon::affine};
#endif

bool supported(Backend b) noexcept {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(GINIPCA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::neon:
#if defined(GINIPCA_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Table* table_for(Backend b) noexcept {
    switch (b) {
#if defined(GINIPCA_HAVE_AVX2)
        case Backend::avx2:
            return &kAvx2;
#endif
#if defined(GINIPCA_HAVE_NEON)
        case Backend::neon:
            return &kNeon;
#endif
        default:
            return &kScalar;
    }
}

// GINIPCA_KERNELS=scalar forces the reference path.
Backend initial_backend() noexcept {
    if (const char* env = std::getenv("GINIPCA_KERNELS")) {
        if (std::string_view(env) == "scalar") return Backend::scalar;
    }
    return detect_backend();
}

std::atomic<Backend>& current() noexcept {
    static std::atomic<Backend> backend{initial_backend()};
    return backend;
}

const Table& active() noexcept { return *table_for(current().load(std::memory_order_relaxed)); }

}  // namespace

std::string_view backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
        case Backend::neon:
            return "neon";
    }
    return "unknown";
}

Backend detect_backend() noexcept {
    if (supported(Backend::avx2)) return Backend::avx2;
    if (supported(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

bool set_backend(Backend b) noexcept {
    if (!supported(b)) return false;
    current().store(b, std::memory_order_relaxed);
    return true;
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return active().dot(a, b);
}

double sum(std::span<const double> x) noexcept { return active().sum(x); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
    active().axpy(alpha, x, y);
}

void affine(std::span<const double> x, double shift, double scale, std::span<double> out) noexcept {
    active().affine(x, shift, scale, out);
}

}  // namespace ginipca::kernels
