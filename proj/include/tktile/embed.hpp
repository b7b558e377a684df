#pragma once

#include "tktile/kgraph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tktile {

/// Injective embedding of a small pattern into one or more host graphs on a
/// shared vertex set. Pattern edge i must land in hosts[edge_host[i]].
struct EmbeddingProblem {
    const KGraph * pattern = nullptr;
    std::vector<const KGraph *> hosts;
    std::vector<int> edge_host;
    /// Host vertices usable as images; empty means all.
    VertexSet allowed;
};

struct EmbeddingResult {
    Verdict verdict = Verdict::no;
    /// map[p] is the host image of pattern vertex p.
    std::vector<Vertex> map;
    std::uint64_t nodes = 0;
};

/// Deterministic backtracking: pattern edges are ordered by how few host edges
/// could carry them, vertices follow that order, and each candidate list is a
/// codegree neighborhood whenever an edge is one vertex from complete.
auto find_embedding(const EmbeddingProblem & problem, std::uint64_t budget) -> EmbeddingResult;

}
