#pragma once

#include "tktile/error.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace tktile {

struct ExactCoverResult {
    Verdict verdict = Verdict::no;
    /// Chosen row indices, in the order they were selected.
    std::vector<std::size_t> rows;
    std::uint64_t nodes = 0;
};

/// Knuth's dancing links over a 0/1 matrix. Every column must be covered
/// exactly once. Columns are chosen by fewest remaining rows, ties to the
/// lowest id; rows are tried in input order, so the search is deterministic.
class ExactCover {
public:
    /// Called after each row is chosen with the current partial solution;
    /// returning false prunes that branch.
    using Prune = std::function<bool(const std::vector<std::size_t> &)>;

    ExactCover(int columns, const std::vector<std::vector<int>> & rows);

    auto solve(std::uint64_t budget, const Prune & prune = {}) -> ExactCoverResult;

private:
    struct Node {
        int left, right, up, down, column;
        std::size_t row;
    };

    void cover(int c);
    void uncover(int c);
    auto search(const Prune & prune) -> bool;

    std::vector<Node> _nodes;
    std::vector<int> _size;
    int _columns;
    std::vector<std::size_t> _partial;
    std::uint64_t _budget = 0, _visited = 0;
    bool _out_of_budget = false;
};

}
