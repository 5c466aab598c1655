#include "ginipca/kernels.hpp"

#include <cstddef>

namespace ginipca::kernels::scalar {

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double sum(std::span<const double> x) noexcept {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void affine(std::span<const double> x, double shift, double scale, std::span<double> out) noexcept {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - shift) * scale;
}

}  // namespace ginipca::kernels::scalar
