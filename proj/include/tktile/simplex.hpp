#pragma once

#include "tktile/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tktile {

/// minimize c.x subject to A x = b, x >= 0, in exact rationals.
/// A is stored by sparse columns.
struct LinearProgram {
    using Column = std::vector<std::pair<int, Rational>>;

    int rows = 0;
    std::vector<Column> columns;
    std::vector<Rational> b;
    std::vector<Rational> c;

    auto add_column(Column column, Rational cost) -> std::size_t
    {
        columns.push_back(std::move(column));
        c.push_back(std::move(cost));
        return columns.size() - 1;
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;
    Rational objective;
    /// optimal: the dual y with c_j - y.A_j >= 0 for every column.
    /// infeasible: a Farkas ray y with y.A_j <= 0 for every column and y.b > 0.
    std::vector<Rational> y;
    std::uint64_t pivots = 0;
};

/// Two-phase revised simplex with a dense basis inverse. Pricing is Dantzig's
/// most negative reduced cost, falling back to Bland's rule during long
/// degenerate stretches.
/// Rows whose b is negative are negated internally (y is reported for the
/// original rows). Deterministic: columns are priced in index order.
auto solve_lp(const LinearProgram & lp, std::uint64_t max_pivots = 10'000'000) -> LpResult;

}
