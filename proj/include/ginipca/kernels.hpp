#pragma once

#include <span>
#include <string_view>

// Data-parallel inner loops. Every kernel has a scalar reference in
// kernels/scalar.cpp; AVX2+FMA and NEON variants are built when the target
// supports them and picked once at startup. Variants agree with the scalar
// reference to rounding (summation order differs), and any single variant is
// bitwise deterministic.

namespace ginipca::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b) noexcept;

/// Backend used by the dispatched entry points below.
Backend active_backend() noexcept;

/// Best backend the running CPU supports.
Backend detect_backend() noexcept;

/// Overrides dispatch, e.g. for equivalence tests. Returns false (and leaves
/// dispatch unchanged) if the backend is not compiled in or not supported.
bool set_backend(Backend b) noexcept;

/// Σ a_i b_i. Lengths must match.
double dot(std::span<const double> a, std::span<const double> b) noexcept;

/// Σ x_i.
double sum(std::span<const double> x) noexcept;

/// y_i += alpha x_i.
void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept;

/// out_i = (x_i - shift) * scale. `out` may alias `x`.
void affine(std::span<const double> x, double shift, double scale, std::span<double> out) noexcept;

/// Per-backend entry points, exposed for equivalence testing.
namespace scalar {
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double sum(std::span<const double> x) noexcept;
void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept;
void affine(std::span<const double> x, double shift, double scale, std::span<double> out) noexcept;
}  // namespace scalar

#if defined(GINIPCA_HAVE_AVX2)
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double sum(std::span<const double> x) noexcept;
void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept;
void affine(std::span<const double> x, double shift, double scale, std::span<double> out) noexcept;
}  // namespace avx2
#endif

#if defined(GINIPCA_HAVE_NEON)
namespace neon {
double dot(std::span<const double> a, std::span<const double> b) noexcept;
double sum(std::span<const double> x) noexcept;
void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept;
void affine(std::span<const double> x, double shift, double scale, std::span<double> out) noexcept;
}  // namespace neon
#endif

}  // namespace ginipca::kernels
