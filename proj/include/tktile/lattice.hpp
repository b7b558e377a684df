#pragma once

// Finite-n absorption machinery for F = T_k: index vectors, robust vectors,
// integer lattices, connectors, reachability, absorbers and the density and
// colouring predicates.

#include "tktile/kgraph.hpp"
#include "tktile/patterns.hpp"
#include "tktile/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tktile {

/// Ordered blocks V_1..V_r: disjoint, nonempty, covering {0..n-1}.
class VertexPartition {
public:
    VertexPartition(int n, std::vector<VertexSet> blocks);

    static auto single(int n) -> VertexPartition;

    auto n() const noexcept -> int { return _n; }
    auto size() const noexcept -> std::size_t { return _blocks.size(); }
    auto blocks() const noexcept -> const std::vector<VertexSet> & { return _blocks; }
    auto block_of(Vertex v) const -> std::size_t;

private:
    int _n;
    std::vector<VertexSet> _blocks;
    std::vector<std::size_t> _block_of;
};

using IndexVector = std::vector<int>;
using IntVector = std::vector<Integer>;

auto index_vector(const VertexPartition & p, std::span<const Vertex> s) -> IndexVector;

enum class RobustMode { exact, packing_bound };

struct RobustOptions {
    RobustMode mode = RobustMode::exact;
    std::uint64_t cap = default_copy_cap;
    /// Search nodes per vector.
    std::uint64_t budget = 5'000'000;
    unsigned workers = 1;
};

struct RobustVector {
    IndexVector vector;
    /// yes: robust; no: not robust; unknown: undecided within budget or by the packing bound.
    Verdict robust = Verdict::unknown;
    /// Distinct supporting sets with this index vector.
    std::size_t sets = 0;
    /// Exact mode: tau when tau <= threshold (value_exact), else threshold + 1.
    /// Packing mode: size of the disjoint family found (a lower bound on tau).
    std::size_t value = 0;
    bool value_exact = false;
    /// Exact mode: a transversal of size <= threshold, when one exists.
    /// Packing mode: the disjoint supporting sets.
    std::vector<VertexSet> witness;
};

struct RobustReport {
    /// floor(beta n): the largest W a robust vector must survive.
    std::size_t threshold = 0;
    RobustMode mode = RobustMode::exact;
    /// One entry per index vector achieved by some copy, ascending.
    std::vector<RobustVector> vectors;

    auto robust() const -> std::vector<IndexVector>;
    auto any_unknown() const -> bool;
};

auto robust_vectors(const KGraph & h, const VertexPartition & p, const Rational & beta, const RobustOptions & options = {})
    -> RobustReport;

/// Integer span of the generators, cached in Hermite form together with the
/// unimodular transform, so membership comes with explicit coefficients.
class LatticeBasis {
public:
    LatticeBasis(std::size_t dim, std::vector<IntVector> generators);

    static auto of(std::size_t dim, std::span<const IndexVector> generators) -> LatticeBasis;

    auto dim() const noexcept -> std::size_t { return _dim; }
    auto generators() const noexcept -> const std::vector<IntVector> & { return _generators; }
    /// Nonzero Hermite rows: pivots strictly move right, are positive, and
    /// entries above a pivot lie in [0, pivot).
    auto hermite() const noexcept -> const std::vector<IntVector> & { return _hermite; }
    auto rank() const noexcept -> std::size_t { return _hermite.size(); }

    /// Coefficients c with sum c_i * generators[i] = v, or none.
    auto express(const IntVector & v) const -> std::optional<IntVector>;

private:
    std::size_t _dim;
    std::vector<IntVector> _generators;
    std::vector<IntVector> _hermite;
    std::vector<std::size_t> _pivots;
    /// _transform[i] expresses _hermite[i] over the generators.
    std::vector<IntVector> _transform;
};

auto lattice_contains(const LatticeBasis & lattice, const IntVector & v) -> bool;

struct Transferral {
    /// yes: u_i - u_j is in the lattice of robust vectors; no: it is not and
    /// every vector was decided; unknown: not found but some vectors were undecided.
    Verdict verdict = Verdict::no;
    IntVector target;
    /// A direct witness s - t with s and t robust, when one exists.
    std::optional<std::pair<IndexVector, IndexVector>> pair;
    /// Otherwise the combination found through the Hermite basis.
    std::vector<IndexVector> generators;
    IntVector coefficients;
    RobustReport robust;
};

auto has_transferral(const KGraph & h, const VertexPartition & p, const Rational & beta, std::size_t i, std::size_t j,
    const RobustOptions & options = {}) -> Transferral;

struct Connector {
    VertexSet set;
    /// Perfect tilings of H[set + u] and H[set + v].
    Tiling with_u;
    Tiling with_v;
};

struct ConnectorSearch {
    Verdict verdict = Verdict::unknown;
    std::optional<Connector> connector;
    std::uint64_t nodes = 0;
};

/// Smallest-first, then lexicographic, over sets of size s-1, 2s-1, ..., st-1
/// avoiding `forbidden`, u and v.
auto find_connector(const KGraph & h, Vertex u, Vertex v, int t, std::span<const Vertex> forbidden = {},
    std::uint64_t budget = 5'000'000) -> ConnectorSearch;

/// Every connector of size at most st-1, in search order. Throws BudgetExceeded.
auto all_connectors(const KGraph & h, Vertex u, Vertex v, int t, std::uint64_t budget = 5'000'000)
    -> std::vector<VertexSet>;

enum class ReachMode { certificate, exact };

struct Reachability {
    Verdict verdict = Verdict::unknown;
    ReachMode mode = ReachMode::certificate;
    /// Certificate mode, verdict yes: m+1 pairwise disjoint connectors.
    std::vector<Connector> certificate;
    /// Verdict no: a set W of at most m vertices meeting every connector.
    std::optional<VertexSet> blocker;
    /// Exact mode: size of the connector family.
    std::size_t connectors = 0;
    std::uint64_t nodes = 0;
};

/// Certificate mode grows a maximal family of disjoint connectors greedily:
/// m+1 of them prove reachability, and if fewer were found their union is a
/// transversal, which proves the opposite when it has at most m vertices.
/// Anything else is unknown. Exact mode compares the connector family's
/// transversal number with m.
auto reachable(const KGraph & h, Vertex u, Vertex v, int m, int t, ReachMode mode, std::uint64_t budget = 5'000'000)
    -> Reachability;

struct Closedness {
    Verdict verdict = Verdict::yes;
    /// First pair (lexicographic) that is not reachable, or undecided when none is refuted.
    std::optional<std::pair<Vertex, Vertex>> failing;
    std::size_t pairs = 0;
};

auto is_closed(const KGraph & h, std::span<const Vertex> u, int m, int t, ReachMode mode,
    std::uint64_t budget = 5'000'000, unsigned workers = 1) -> Closedness;

struct Absorber {
    VertexSet set;
    /// Perfect tilings of H[set] and H[set + S].
    Tiling alone;
    Tiling with_s;
};

struct AbsorberSearch {
    Verdict verdict = Verdict::unknown;
    std::optional<Absorber> absorber;
    std::uint64_t nodes = 0;
};

/// Smallest-first over nonempty sets of size s, 2s, ..., s^2 t avoiding S and `forbidden`.
auto find_absorber(const KGraph & h, std::span<const Vertex> s, int t, std::span<const Vertex> forbidden = {},
    std::uint64_t budget = 5'000'000) -> AbsorberSearch;

/// e(H) over prod C(|V_i|, x_i); every edge must have index vector x.
auto x_density(const KGraph & h, const VertexPartition & p, const IndexVector & x) -> Rational;
auto is_complete(const KGraph & h, const VertexPartition & p, const IndexVector & x, const Rational & eps) -> bool;

struct Monochromatic {
    /// Lowest colour among those used most.
    int color = 0;
    Rational fraction;
};

/// Colours are indexed like h.edges().
auto monochromatic_fraction(const KGraph & h, const std::vector<int> & coloring) -> Monochromatic;
auto is_zeta_monochromatic(const KGraph & h, const std::vector<int> & coloring, const Rational & zeta) -> bool;

}
