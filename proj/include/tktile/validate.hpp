#pragma once

// Independent witness validators. They only read edges through
// KGraph::has_edge and plain loops, never through the search code.

#include "tktile/fractional.hpp"
#include "tktile/kgraph.hpp"
#include "tktile/lattice.hpp"
#include "tktile/rainbow.hpp"
#include "tktile/patterns.hpp"

#include <string>

namespace tktile {

struct Check {
    bool ok = true;
    std::string reason;

    static auto pass() -> Check { return {}; }
    static auto fail(std::string why) -> Check { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

/// Edge-sharing structure plus host membership of the three edges.
auto validate_copy(const KGraph & h, const TkCopy & copy) -> Check;

/// Copies valid and pairwise vertex-disjoint; with `perfect`, also covering V(H).
auto validate_tiling(const KGraph & h, const Tiling & tiling, bool perfect) -> Check;

/// Every weighted copy valid, weights nonnegative, loads <= 1; with
/// `perfect`, every load exactly 1.
auto validate_fractional_tiling(const KGraph & h, const FractionalTiling & w, bool perfect) -> Check;

/// Copies valid in H and their vertex sets partition exactly `set`.
auto validate_set_tiling(const KGraph & h, std::span<const Vertex> set, const Tiling & tiling) -> Check;

/// Size at most st-1, avoids u, v and `forbidden`, and both stored tilings
/// cover their sets exactly.
auto validate_connector(const KGraph & h, Vertex u, Vertex v, int t, const Connector & c,
    std::span<const Vertex> forbidden = {}) -> Check;

/// Nonempty, size at most s^2 t, avoids S and `forbidden`, and both stored
/// tilings cover their sets exactly.
auto validate_absorber(const KGraph & h, std::span<const Vertex> s, int t, const Absorber & a,
    std::span<const Vertex> forbidden = {}) -> Check;

/// Perfect tiling of the union, each slot's edge in its assigned host, and
/// every host used exactly once.
auto validate_rainbow_tiling(const GraphFamily & family, const RainbowTiling & rt) -> Check;

/// Injective map, designated edge into H_1 and every other edge into H_2.
auto validate_color_covering(const KGraph & pattern, const KGraph & h1, const KGraph & h2, const ColorCovering & c) -> Check;

/// Edges of J transversal to `classes`, pairwise disjoint and covering every vertex.
auto validate_perfect_matching(const KGraph & j, const std::vector<VertexSet> & classes, const std::vector<Edge> & matching) -> Check;

}
