#pragma once

#include "tktile/kgraph.hpp"
#include "tktile/random.hpp"

#include <cstdint>
#include <span>

namespace tktile {

/// 2-uniform graph on V(H); stored as a KGraph with k = 2.
using PairGraph = KGraph;

auto empty_pair_graph(int n) -> PairGraph;
auto max_degree(const PairGraph & b) -> std::size_t;

/// H_ext: A is the prefix {0, ..., 2n/(2k-1) - 2}; a k-set is an edge iff it meets A.
struct ExtremalInstance {
    KGraph graph;
    VertexSet a;
    VertexSet b;
};

auto extremal_construction(int k, int n) -> ExtremalInstance;

struct AugmentedBlowup {
    KGraph graph;
    PairGraph pairs;

    /// Clone i (0-based) of original vertex u.
    static auto clone(Vertex u, int i, int k) -> Vertex { return u * (2 * k - 1) + i; }
    static auto original(Vertex clone, int k) -> Vertex { return clone / (2 * k - 1); }
};

constexpr int default_blowup_guard = 12;

/// Each vertex becomes 2k-1 clones. H' gets every clone image of an edge of H
/// plus every k-set holding two clones of one vertex; B' gets every clone
/// image of a pair of B plus all pairs of clones of one vertex.
/// Refuses n > guard (GuardExceeded).
auto augmented_blowup(const KGraph & h, const PairGraph & b, int guard = default_blowup_guard) -> AugmentedBlowup;

/// Each round, every (k-1)-set still below the target codegree gains one
/// uniformly chosen completing edge. Sets are visited in lexicographic order.
auto random_with_codegree(int n, int k, int delta_target, std::uint64_t seed, int max_rounds = 64) -> KGraph;

/// Each k-set, in lexicographic order, is kept with probability p.
auto random_kgraph(int n, int k, const Rational & p, std::uint64_t seed) -> KGraph;

/// Componentwise w_i <= u_i for sorted tuples of equal length.
auto dominates(std::span<const Vertex> u, std::span<const Vertex> w) -> bool;

}
