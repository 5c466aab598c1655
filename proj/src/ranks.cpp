#include "ginipca/ranks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ginipca/errors.hpp"
#include "ginipca/kernels.hpp"

namespace ginipca {

RankVector decumulative_ranks(std::span<const double> column) {
    const std::size_t n = column.size();
    if (n < 2) throw DimensionError("ranking needs at least 2 observations");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return column[a] < column[b]; });

    // Ascending positions lo..hi-1 (0-based) hold one tie group; its mean
    // ascending rank is (lo + hi + 1) / 2, reflected to N + 1 - that.
    RankVector out;
    out.values.resize(n);
    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo + 1;
        while (hi < n && column[order[hi]] == column[order[lo]]) ++hi;
        const double rank = static_cast<double>(n + 1) - 0.5 * static_cast<double>(lo + hi + 1);
        for (std::size_t j = lo; j < hi; ++j) out.values[order[j]] = rank;
        lo = hi;
    }
    return out;
}

CenteredRankPower centered_rank_power(const RankVector& ranks, double nu) {
    if (!(nu > 1.0)) throw ParameterError("nu must be > 1");
    if (ranks.size() < 2) throw DimensionError("ranking needs at least 2 observations");

    CenteredRankPower out;
    out.nu = nu;
    out.values.resize(ranks.size());
    const double exponent = nu - 1.0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        out.values[i] = exponent == 1.0 ? ranks.values[i] : std::pow(ranks.values[i], exponent);
    }
    const double mean = kernels::sum(out.values) / static_cast<double>(out.size());
    kernels::affine(out.values, mean, 1.0, out.values);
    return out;
}

CenteredRankPower centered_rank_power(std::span<const double> column, double nu) {
    if (!(nu > 1.0)) throw ParameterError("nu must be > 1");
    return centered_rank_power(decumulative_ranks(column), nu);
}

}  // namespace ginipca
