#pragma once

#include "tktile/kgraph.hpp"

#include <array>
#include <compare>
#include <functional>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tktile {

/// An embedded copy of the generalised triangle T_k.
///
/// Roles follow the pattern positions 1..2k-1: positions 1..k-1 form the base,
/// k and k+1 are the two apexes, and k+2..2k-1 complete the third edge. The
/// three edges are base+apex1, base+apex2 and apex1+apex2+rest.
///
/// Copies are kept canonical (base sorted, apex1 < apex2, rest sorted), which
/// picks one representative per subgraph copy.
class TkCopy {
public:
    TkCopy(int k, std::vector<Vertex> roles);

    auto k() const noexcept -> int { return _k; }
    auto roles() const noexcept -> const std::vector<Vertex> & { return _roles; }
    auto vertices() const noexcept -> const VertexSet & { return _vertices; }

    auto base() const -> std::span<const Vertex> { return {_roles.data(), static_cast<std::size_t>(_k - 1)}; }
    auto apex1() const -> Vertex { return _roles[static_cast<std::size_t>(_k - 1)]; }
    auto apex2() const -> Vertex { return _roles[static_cast<std::size_t>(_k)]; }
    auto rest() const -> std::span<const Vertex> { return {_roles.data() + _k + 1, static_cast<std::size_t>(_k - 2)}; }

    /// Edge slots in canonical order: base edge 1, base edge 2, spine.
    auto edges() const -> std::array<Edge, 3>;

    auto operator<=>(const TkCopy & other) const -> std::strong_ordering
    {
        if (auto c = _vertices <=> other._vertices; c != 0)
            return c;
        return _roles <=> other._roles;
    }
    auto operator==(const TkCopy & other) const -> bool = default;

private:
    int _k;
    std::vector<Vertex> _roles;
    VertexSet _vertices;
};

struct Tiling {
    std::vector<TkCopy> copies;

    auto covered() const -> std::size_t;
    auto is_perfect_for(int n) const -> bool { return covered() == static_cast<std::size_t>(n); }
};

/// The (2k-1)-vertex, 3-edge pattern, 0-based: {0..k-2, k-1}, {0..k-2, k}, {k-1..2k-2}.
auto tk_pattern(int k) -> KGraph;

/// |Aut(F)| by brute force over all vertex permutations (small F only).
auto automorphism_count(const KGraph & pattern) -> std::uint64_t;

/// Lexicographically least canonical copy of T_k inside H[S], |S| = 2k-1.
auto supports_tk(const KGraph & h, std::span<const Vertex> s) -> std::optional<TkCopy>;

constexpr std::uint64_t default_copy_cap = 5'000'000;

struct EnumerateOptions {
    std::optional<VertexSet> restrict_to;
    std::uint64_t cap = default_copy_cap;
    unsigned workers = 1;
};

/// All canonical copies of T_k in H (inside restrict_to when given), sorted by
/// (vertex set, roles). Throws BudgetExceeded past `cap`.
auto enumerate_tk_copies(const KGraph & h, const EnumerateOptions & options = {}) -> std::vector<TkCopy>;

/// Distinct supporting (2k-1)-sets, ascending, from a sorted copy list.
auto supporting_sets(std::span<const TkCopy> copies) -> std::vector<VertexSet>;

struct TightPathCount {
    std::uint64_t total = 0;
    /// Only meaningful with a coloring.
    std::uint64_t rainbow = 0;
};

/// Colors are indexed like h.edges().
auto tight_2paths(const KGraph & h, const std::vector<int> * coloring = nullptr) -> TightPathCount;

/// Calls fn(e1_index, e2_index) for each unordered pair of edges sharing exactly k-1 vertices.
void for_each_tight_2path(const KGraph & h, const std::function<void(std::size_t, std::size_t)> & fn);

/// Vertex i of F becomes the class {i*t, ..., i*t+t-1}.
auto blowup(const KGraph & f, int t) -> KGraph;

/// Searches H for a copy of F[t]; returns the v(F) disjoint host t-sets
/// (class i holds the images of vertex i's clones).
auto find_blowup(const KGraph & h, const KGraph & f, int t, std::uint64_t budget = 50'000'000)
    -> std::optional<std::vector<VertexSet>>;

}
