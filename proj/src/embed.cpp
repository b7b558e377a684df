#include "tktile/embed.hpp"

#include <algorithm>
#include <numeric>

namespace tktile {

namespace {
    struct Plan {
        std::vector<Vertex> order;
        // completed[pos]: pattern edges whose last vertex in `order` is order[pos].
        std::vector<std::vector<std::size_t>> completed;
    };

    auto make_plan(const EmbeddingProblem & problem) -> Plan
    {
        const KGraph & pattern = *problem.pattern;
        const auto & edges = pattern.edges();
        std::vector<std::size_t> edge_order(edges.size());
        std::iota(edge_order.begin(), edge_order.end(), 0);
        std::stable_sort(edge_order.begin(), edge_order.end(), [&](std::size_t a, std::size_t b) {
            return problem.hosts[static_cast<std::size_t>(problem.edge_host[a])]->edge_count()
                < problem.hosts[static_cast<std::size_t>(problem.edge_host[b])]->edge_count();
        });

        Plan plan;
        std::vector<int> position(static_cast<std::size_t>(pattern.n()), -1);
        auto place = [&](Vertex v) {
            if (position[static_cast<std::size_t>(v)] < 0) {
                position[static_cast<std::size_t>(v)] = static_cast<int>(plan.order.size());
                plan.order.push_back(v);
            }
        };
        // Grow along edges that already touch placed vertices so neighborhoods
        // can drive candidate lists as early as possible.
        std::vector<char> used(edges.size(), 0);
        for (std::size_t round = 0; round < edges.size(); ++round) {
            std::size_t pick = edges.size();
            int best_overlap = -1;
            for (auto e : edge_order) {
                if (used[e])
                    continue;
                int overlap = 0;
                for (auto v : edges[e])
                    overlap += position[static_cast<std::size_t>(v)] >= 0;
                if (overlap > best_overlap) {
                    best_overlap = overlap;
                    pick = e;
                }
            }
            used[pick] = 1;
            for (auto v : edges[pick])
                place(v);
        }
        for (Vertex v = 0; v < pattern.n(); ++v)
            place(v);

        plan.completed.resize(plan.order.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            int last = -1;
            for (auto v : edges[e])
                last = std::max(last, position[static_cast<std::size_t>(v)]);
            plan.completed[static_cast<std::size_t>(last)].push_back(e);
        }
        return plan;
    }

    struct Search {
        const EmbeddingProblem & problem;
        const Plan & plan;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        bool out_of_budget = false;
        std::vector<Vertex> map{};
        std::vector<char> taken{};
        std::vector<char> allowed{};

        auto image_of(const Edge & e) const -> Edge
        {
            Edge img;
            img.reserve(e.size());
            for (auto v : e)
                img.push_back(map[static_cast<std::size_t>(v)]);
            std::sort(img.begin(), img.end());
            return img;
        }

        auto run(std::size_t pos) -> bool
        {
            if (pos == plan.order.size())
                return true;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            const Vertex p = plan.order[pos];
            const auto & pattern_edges = problem.pattern->edges();
            std::vector<Vertex> candidates;
            if (! plan.completed[pos].empty()) {
                auto e = plan.completed[pos].front();
                Edge others;
                for (auto v : pattern_edges[e])
                    if (v != p)
                        others.push_back(map[static_cast<std::size_t>(v)]);
                std::sort(others.begin(), others.end());
                candidates = problem.hosts[static_cast<std::size_t>(problem.edge_host[e])]->neighborhood(others);
            }
            else
                candidates = iota_vertices(static_cast<int>(taken.size()));

            for (auto c : candidates) {
                if (taken[static_cast<std::size_t>(c)] || ! allowed[static_cast<std::size_t>(c)])
                    continue;
                map[static_cast<std::size_t>(p)] = c;
                bool ok = true;
                for (auto e : plan.completed[pos])
                    if (! problem.hosts[static_cast<std::size_t>(problem.edge_host[e])]->has_edge(image_of(pattern_edges[e]))) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                taken[static_cast<std::size_t>(c)] = 1;
                if (run(pos + 1))
                    return true;
                taken[static_cast<std::size_t>(c)] = 0;
                if (out_of_budget)
                    return false;
            }
            map[static_cast<std::size_t>(p)] = -1;
            return false;
        }
    };
}

auto find_embedding(const EmbeddingProblem & problem, std::uint64_t budget) -> EmbeddingResult
{
    if (! problem.pattern || problem.hosts.empty())
        throw Error(ErrorKind::invalid_argument, "embedding needs a pattern and at least one host");
    const int n = problem.hosts.front()->n();
    for (auto * h : problem.hosts) {
        if (h->n() != n)
            throw Error(ErrorKind::invalid_family, "hosts must share a vertex set");
        if (h->k() != problem.pattern->k())
            throw Error(ErrorKind::invalid_uniformity, "pattern and host uniformities differ");
    }
    if (problem.edge_host.size() != problem.pattern->edge_count())
        throw Error(ErrorKind::invalid_argument, "edge_host must name a host for every pattern edge");
    for (auto g : problem.edge_host)
        if (g < 0 || static_cast<std::size_t>(g) >= problem.hosts.size())
            throw Error(ErrorKind::invalid_argument, "edge_host index out of range");

    auto plan = make_plan(problem);
    Search search{problem, plan, budget};
    search.map.assign(static_cast<std::size_t>(problem.pattern->n()), -1);
    search.taken.assign(static_cast<std::size_t>(n), 0);
    search.allowed.assign(static_cast<std::size_t>(n), problem.allowed.empty() ? 1 : 0);
    for (auto v : problem.allowed)
        if (v >= 0 && v < n)
            search.allowed[static_cast<std::size_t>(v)] = 1;

    EmbeddingResult result;
    if (problem.pattern->n() > n) {
        result.verdict = Verdict::no;
        return result;
    }
    bool found = search.run(0);
    result.nodes = search.nodes;
    if (found) {
        result.verdict = Verdict::yes;
        result.map = std::move(search.map);
    }
    else
        result.verdict = search.out_of_budget ? Verdict::unknown : Verdict::no;
    return result;
}

}
