#pragma once

#include <span>
#include <vector>

namespace ginipca {

/// Decumulative ranks: 1 goes to the largest value, N to the smallest.
/// Tied values share the mean of the ranks they jointly occupy, so the total
/// is always N(N+1)/2 and each value lies in [1, N].
struct RankVector {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
};

/// R_i^(nu-1) minus its mean over the column; sums to zero.
struct CenteredRankPower {
    std::vector<double> values;
    double nu = 2.0;

    std::size_t size() const noexcept { return values.size(); }
};

/// Sort plus one scan over tie groups, O(N log N). Throws DimensionError for N < 2.
RankVector decumulative_ranks(std::span<const double> column);

/// Throws ParameterError for nu <= 1 and DimensionError for N < 2.
CenteredRankPower centered_rank_power(std::span<const double> column, double nu);

/// Same as above starting from ranks already computed.
CenteredRankPower centered_rank_power(const RankVector& ranks, double nu);

}  // namespace ginipca
