#include "tktile/exact_cover.hpp"

#include <string>

namespace tktile {

ExactCover::ExactCover(int columns, const std::vector<std::vector<int>> & rows) :
    _size(static_cast<std::size_t>(columns) + 1, 0), _columns(columns)
{
    // Node 0 is the root; nodes 1..columns are column headers.
    _nodes.resize(static_cast<std::size_t>(columns) + 1);
    for (int c = 0; c <= columns; ++c) {
        auto & n = _nodes[static_cast<std::size_t>(c)];
        n.left = c == 0 ? columns : c - 1;
        n.right = c == columns ? 0 : c + 1;
        n.up = n.down = c;
        n.column = c;
        n.row = SIZE_MAX;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int first = -1;
        for (int col : rows[r]) {
            if (col < 0 || col >= columns)
                throw Error(ErrorKind::invalid_argument, "exact cover column " + std::to_string(col) + " out of range");
            int c = col + 1;
            int id = static_cast<int>(_nodes.size());
            Node n{};
            n.column = c;
            n.row = r;
            n.down = c;
            n.up = _nodes[static_cast<std::size_t>(c)].up;
            _nodes[static_cast<std::size_t>(n.up)].down = id;
            _nodes[static_cast<std::size_t>(c)].up = id;
            if (first < 0) {
                n.left = n.right = id;
                first = id;
            }
            else {
                n.right = first;
                n.left = _nodes[static_cast<std::size_t>(first)].left;
            }
            _nodes.push_back(n);
            if (first != id) {
                _nodes[static_cast<std::size_t>(_nodes[static_cast<std::size_t>(id)].left)].right = id;
                _nodes[static_cast<std::size_t>(first)].left = id;
            }
            ++_size[static_cast<std::size_t>(c)];
        }
    }
}

void ExactCover::cover(int c)
{
    auto & h = _nodes[static_cast<std::size_t>(c)];
    _nodes[static_cast<std::size_t>(h.right)].left = h.left;
    _nodes[static_cast<std::size_t>(h.left)].right = h.right;
    for (int i = h.down; i != c; i = _nodes[static_cast<std::size_t>(i)].down)
        for (int j = _nodes[static_cast<std::size_t>(i)].right; j != i; j = _nodes[static_cast<std::size_t>(j)].right) {
            auto & n = _nodes[static_cast<std::size_t>(j)];
            _nodes[static_cast<std::size_t>(n.down)].up = n.up;
            _nodes[static_cast<std::size_t>(n.up)].down = n.down;
            --_size[static_cast<std::size_t>(n.column)];
        }
}

void ExactCover::uncover(int c)
{
    auto & h = _nodes[static_cast<std::size_t>(c)];
    for (int i = h.up; i != c; i = _nodes[static_cast<std::size_t>(i)].up)
        for (int j = _nodes[static_cast<std::size_t>(i)].left; j != i; j = _nodes[static_cast<std::size_t>(j)].left) {
            auto & n = _nodes[static_cast<std::size_t>(j)];
            ++_size[static_cast<std::size_t>(n.column)];
            _nodes[static_cast<std::size_t>(n.down)].up = j;
            _nodes[static_cast<std::size_t>(n.up)].down = j;
        }
    _nodes[static_cast<std::size_t>(h.right)].left = c;
    _nodes[static_cast<std::size_t>(h.left)].right = c;
}

auto ExactCover::search(const Prune & prune) -> bool
{
    if (_nodes[0].right == 0)
        return true;
    if (++_visited > _budget) {
        _out_of_budget = true;
        return false;
    }
    int best = -1;
    for (int c = _nodes[0].right; c != 0; c = _nodes[static_cast<std::size_t>(c)].right)
        if (best < 0 || _size[static_cast<std::size_t>(c)] < _size[static_cast<std::size_t>(best)])
            best = c;
    if (_size[static_cast<std::size_t>(best)] == 0)
        return false;

    cover(best);
    for (int r = _nodes[static_cast<std::size_t>(best)].down; r != best; r = _nodes[static_cast<std::size_t>(r)].down) {
        _partial.push_back(_nodes[static_cast<std::size_t>(r)].row);
        for (int j = _nodes[static_cast<std::size_t>(r)].right; j != r; j = _nodes[static_cast<std::size_t>(j)].right)
            cover(_nodes[static_cast<std::size_t>(j)].column);
        bool done = (! prune || prune(_partial)) && search(prune);
        for (int j = _nodes[static_cast<std::size_t>(r)].left; j != r; j = _nodes[static_cast<std::size_t>(j)].left)
            uncover(_nodes[static_cast<std::size_t>(j)].column);
        if (done) {
            uncover(best);
            return true;
        }
        _partial.pop_back();
        if (_out_of_budget)
            break;
    }
    uncover(best);
    return false;
}

auto ExactCover::solve(std::uint64_t budget, const Prune & prune) -> ExactCoverResult
{
    _budget = budget;
    _visited = 0;
    _out_of_budget = false;
    _partial.clear();
    ExactCoverResult result;
    bool found = search(prune);
    result.nodes = _visited;
    if (found) {
        result.verdict = Verdict::yes;
        result.rows = _partial;
    }
    else
        result.verdict = _out_of_budget ? Verdict::unknown : Verdict::no;
    return result;
}

}
