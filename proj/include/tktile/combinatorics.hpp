#pragma once

#include "tktile/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tktile {

/// Exact binomial coefficient, arbitrary precision.
auto binomial(long n, long r) -> Integer;

/// Binomial coefficient, saturating at UINT64_MAX.
auto binomial_u64(std::uint64_t n, std::uint64_t r) -> std::uint64_t;

/// Table of C(i, j) for 0 <= i <= n, 0 <= j <= r, saturating.
class BinomialTable {
public:
    BinomialTable() = default;
    BinomialTable(int n, int r);

    auto operator()(int i, int j) const -> std::uint64_t
    {
        if (j < 0 || i < j)
            return 0;
        return _table[static_cast<std::size_t>(i) * static_cast<std::size_t>(_r + 1) + static_cast<std::size_t>(j)];
    }

    /// Colex rank of a sorted set of distinct nonnegative ints.
    auto colex_rank(std::span<const int> sorted) const -> std::uint64_t
    {
        std::uint64_t rank = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            rank += (*this)(sorted[i], static_cast<int>(i) + 1);
        return rank;
    }

private:
    int _n = 0, _r = 0;
    std::vector<std::uint64_t> _table;
};

/// Visits every r-subset of `pool` in lexicographic order of positions.
/// The callback receives the current subset and returns false to stop.
/// Returns false iff the callback stopped the walk.
template <typename Fn>
auto for_each_combination(std::span<const int> pool, int r, Fn && fn) -> bool
{
    const int m = static_cast<int>(pool.size());
    if (r < 0 || r > m)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::vector<int> subset(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        for (int i = 0; i < r; ++i)
            subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (! fn(std::span<const int>(subset)))
            return false;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i)
            --i;
        if (i < 0)
            return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// 0..n-1 as a vector, handy as a combination pool.
auto iota_vertices(int n) -> std::vector<int>;

/// Sorted set helpers over ascending int vectors.
auto set_difference(std::span<const int> a, std::span<const int> b) -> std::vector<int>;
auto set_union(std::span<const int> a, std::span<const int> b) -> std::vector<int>;
auto set_intersection_size(std::span<const int> a, std::span<const int> b) -> std::size_t;
auto is_sorted_distinct(std::span<const int> a) -> bool;

}
