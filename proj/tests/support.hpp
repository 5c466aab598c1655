#pragma once

#include <cmath>
#include <vector>

#include "ginipca/matrix.hpp"
#include "ginipca/rng.hpp"

namespace test_support {

// Brute-force ν = 2 Gini mean difference: mean absolute difference over ordered pairs.
inline double pairwise_gmd(const std::vector<double>& x) {
    const std::size_t n = x.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += std::fabs(x[i] - x[j]);
    return s / static_cast<double>(n * (n - 1));
}

inline std::vector<double> normals(ginipca::CounterRng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.normal();
    return v;
}

inline ginipca::Matrix random_matrix(ginipca::CounterRng& rng, std::size_t rows, std::size_t cols) {
    ginipca::Matrix m(rows, cols);
    for (auto& x : m.data()) x = rng.normal();
    return m;
}

inline double max_abs_diff(const ginipca::Matrix& a, const ginipca::Matrix& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::fabs(a.data()[i] - b.data()[i]));
    return d;
}

}  // namespace test_support
