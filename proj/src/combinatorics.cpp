#include "tktile/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tktile {

auto binomial(long n, long r) -> Integer
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return result;
}

auto binomial_u64(std::uint64_t n, std::uint64_t r) -> std::uint64_t
{
    if (r > n)
        return 0;
    Integer b = binomial(static_cast<long>(n), static_cast<long>(r));
    if (! b.fits_ulong_p())
        return std::numeric_limits<std::uint64_t>::max();
    return b.get_ui();
}

BinomialTable::BinomialTable(int n, int r) :
    _n(n), _r(r), _table(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(r + 1), 0)
{
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    auto at = [&](int i, int j) -> std::uint64_t & {
        return _table[static_cast<std::size_t>(i) * static_cast<std::size_t>(_r + 1) + static_cast<std::size_t>(j)];
    };
    for (int i = 0; i <= n; ++i) {
        at(i, 0) = 1;
        for (int j = 1; j <= std::min(i, r); ++j) {
            std::uint64_t a = at(i - 1, j - 1), b = (j <= i - 1) ? at(i - 1, j) : 0;
            at(i, j) = (a > cap - b) ? cap : a + b;
        }
    }
}

auto iota_vertices(int n) -> std::vector<int>
{
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

auto set_difference(std::span<const int> a, std::span<const int> b) -> std::vector<int>
{
    std::vector<int> out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

auto set_union(std::span<const int> a, std::span<const int> b) -> std::vector<int>
{
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

auto set_intersection_size(std::span<const int> a, std::span<const int> b) -> std::size_t
{
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

auto is_sorted_distinct(std::span<const int> a) -> bool
{
    return std::adjacent_find(a.begin(), a.end(), [](int x, int y) { return x >= y; }) == a.end();
}

}
