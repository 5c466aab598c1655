#include "ginipca/kernels.hpp"

#include <arm_neon.h>

#include <cstddef>

namespace ginipca::kernels::neon {

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    const std::size_t n = a.size();
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a.data() + i + 2), vld1q_f64(b.data() + i + 2));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_f64(acc0, vld1q_f64(x.data() + i));
        acc1 = vaddq_f64(acc1, vld1q_f64(x.data() + i + 2));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += x[i];
    return acc;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
    const std::size_t n = x.size();
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y.data() + i, vfmaq_f64(vld1q_f64(y.data() + i), va, vld1q_f64(x.data() + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void affine(std::span<const double> x, double shift, double scale, std::span<double> out) noexcept {
    const std::size_t n = x.size();
    const float64x2_t vs = vdupq_n_f64(shift);
    const float64x2_t vk = vdupq_n_f64(scale);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(out.data() + i, vmulq_f64(vsubq_f64(vld1q_f64(x.data() + i), vs), vk));
    }
    for (; i < n; ++i) out[i] = (x[i] - shift) * scale;
}

}  // namespace ginipca::kernels::neon
