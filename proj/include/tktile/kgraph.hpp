#pragma once

#include "tktile/combinatorics.hpp"
#include "tktile/error.hpp"
#include "tktile/rational.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tktile {

using Vertex = int;

/// Sorted ascending list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// A k-set of vertices, sorted ascending.
using Edge = std::vector<Vertex>;

/// How the KGraph constructor treats repeated edges.
enum class Duplicates { merge, reject };

/// Immutable k-uniform hypergraph on vertices 0..n-1. Edges are stored
/// canonically (each sorted, the list in lexicographic order, no repeats).
/// Copies share the lazily built codegree index, so passing by value is cheap
/// after the first query.
class KGraph {
public:
    KGraph(int n, int k, std::vector<Edge> edges, Duplicates duplicates = Duplicates::merge);

    static auto edgeless(int n, int k) -> KGraph { return KGraph(n, k, {}); }
    static auto complete(int n, int k) -> KGraph;

    auto n() const noexcept -> int { return _n; }
    auto k() const noexcept -> int { return _k; }
    auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }
    auto edge_count() const noexcept -> std::size_t { return _edges.size(); }

    /// `e` must be sorted; any size other than k returns false.
    auto has_edge(std::span<const Vertex> e) const -> bool;

    /// N(S) for a (k-1)-set S: the vertices completing S to an edge, ascending.
    auto neighborhood(std::span<const Vertex> s) const -> const std::vector<Vertex> &;

    auto codegree(std::span<const Vertex> s) const -> std::size_t { return neighborhood(s).size(); }

    /// Number of edges containing v.
    auto degree(Vertex v) const -> std::size_t;

    auto operator==(const KGraph & other) const -> bool
    {
        return _n == other._n && _k == other._k && _edges == other._edges;
    }

private:
    struct Index;
    struct LazyIndex;

    auto rank_of(std::span<const Vertex> sorted) const -> std::uint64_t { return _binomials.colex_rank(sorted); }
    auto index() const -> const Index &;
    void check_set(std::span<const Vertex> s, std::size_t expected_size) const;

    int _n, _k;
    std::vector<Edge> _edges;
    BinomialTable _binomials;
    // Edge membership: a bitmap over colex ranks for small C(n,k), else sorted ranks.
    std::vector<std::uint64_t> _edge_bits;
    std::vector<std::uint64_t> _edge_ranks;
    bool _bitmap = false;
    std::shared_ptr<LazyIndex> _lazy;
};

struct CodegreeMinimum {
    std::size_t value = 0;
    VertexSet witness;
};

/// Minimum codegree over all (k-1)-sets; ties go to the lexicographically
/// smallest witness. `workers` splits the scan; the answer does not depend on it.
auto min_codegree(const KGraph & h, unsigned workers = 1) -> CodegreeMinimum;

/// e(H) / C(n,k), kept unreduced alongside the exact value.
struct DensityValue {
    Integer numerator;
    Integer denominator;

    auto value() const -> Rational
    {
        Rational q(numerator, denominator);
        q.canonicalize();
        return q;
    }
};

auto density(const KGraph & h) -> DensityValue;

struct InducedSubgraph {
    KGraph graph;
    /// relabel[i] is the original id of new vertex i.
    VertexSet relabel;
};

auto induced(const KGraph & h, std::span<const Vertex> s) -> InducedSubgraph;

/// Number of edges of H lying inside the sorted set s (no relabelling).
auto induced_edge_count(const KGraph & h, std::span<const Vertex> s) -> std::size_t;

enum class ExtremalMode { exact, heuristic };

struct ExtremalOptions {
    ExtremalMode mode = ExtremalMode::exact;
    /// Overrides floor((2k-3)n/(2k-1)).
    std::optional<int> size_override;
    /// Maximum number of candidate sets examined in exact mode.
    std::uint64_t budget = 50'000'000;
    unsigned workers = 1;
};

struct ExtremalResult {
    /// yes: witness found. no: exhaustively refuted (exact mode only).
    /// unknown: heuristic mode found nothing.
    Verdict verdict = Verdict::unknown;
    std::optional<VertexSet> witness;
    ExtremalMode mode = ExtremalMode::exact;
    int target_size = 0;
};

auto gamma_extremal_size(int n, int k) -> int;

auto is_gamma_extremal(const KGraph & h, const Rational & gamma, const ExtremalOptions & options = {}) -> ExtremalResult;

}
