#pragma once

#include "tktile/kgraph.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace tktile {

/// Minimum vertex transversal of a set family.
struct TransversalResult {
    /// yes: search finished; unknown: budget ran out.
    Verdict verdict = Verdict::unknown;
    /// tau when `exact`; limit + 1 (a lower bound) when the search finished
    /// without a transversal; after a budget stop, the size of `witness` if any.
    std::size_t value = 0;
    bool exact = false;
    VertexSet witness;
    std::uint64_t nodes = 0;
};

/// Branch and bound looking for transversals of size at most `limit`. When one
/// exists the smallest is returned with exact = true; otherwise the result says
/// tau > limit.
auto min_transversal(const std::vector<VertexSet> & family, int n,
    std::size_t limit = std::numeric_limits<std::size_t>::max(), std::uint64_t budget = 50'000'000)
    -> TransversalResult;

struct PackingResult {
    /// yes: `sets` is maximum, or reached `target`; unknown: budget ran out first.
    Verdict verdict = Verdict::unknown;
    /// Indices into the family of pairwise disjoint members.
    std::vector<std::size_t> sets;
    std::uint64_t nodes = 0;
};

/// Maximum number of pairwise disjoint members, stopping early at `target`.
/// Branches on the lowest vertex still free: cover it with a member whose
/// minimum it is, or leave it uncovered.
auto max_disjoint_sets(const std::vector<VertexSet> & family, int n,
    std::size_t target = std::numeric_limits<std::size_t>::max(), std::uint64_t budget = 50'000'000)
    -> PackingResult;

}
