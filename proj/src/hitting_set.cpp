#include "tktile/hitting_set.hpp"

#include <algorithm>

namespace tktile {

namespace {
    /// Drops duplicates and any member containing another member.
    auto minimal_members(std::vector<VertexSet> family) -> std::vector<VertexSet>
    {
        for (auto & f : family) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
        }
        std::sort(family.begin(), family.end(), [](auto & a, auto & b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        family.erase(std::unique(family.begin(), family.end()), family.end());
        std::vector<VertexSet> out;
        for (auto & f : family)
            if (std::none_of(out.begin(), out.end(), [&](auto & g) { return std::includes(f.begin(), f.end(), g.begin(), g.end()); }))
                out.push_back(f);
        return out;
    }

    struct TransversalSearch {
        const std::vector<VertexSet> & family;
        std::vector<std::vector<std::size_t>> containing;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        bool out_of_budget = false;
        std::vector<int> hits{};
        std::vector<char> banned{};
        std::vector<char> mark{};
        VertexSet chosen{}, best{};
        std::size_t best_size = 0;

        static constexpr std::size_t infeasible = std::numeric_limits<std::size_t>::max();

        /// Disjoint unhit members (restricted to unbanned vertices) each need their own vertex.
        auto lower_bound() -> std::size_t
        {
            std::fill(mark.begin(), mark.end(), 0);
            std::size_t count = 0;
            for (std::size_t i = 0; i < family.size(); ++i) {
                if (hits[i])
                    continue;
                bool any = false, clash = false;
                for (auto v : family[i])
                    if (! banned[static_cast<std::size_t>(v)]) {
                        any = true;
                        clash |= mark[static_cast<std::size_t>(v)] != 0;
                    }
                if (! any)
                    return infeasible;
                if (clash)
                    continue;
                for (auto v : family[i])
                    mark[static_cast<std::size_t>(v)] = 1;
                ++count;
            }
            return count;
        }

        void pick(Vertex v, int delta)
        {
            for (auto i : containing[static_cast<std::size_t>(v)])
                hits[i] += delta;
        }

        void run()
        {
            if (out_of_budget)
                return;
            std::size_t open = family.size();
            for (std::size_t i = 0; i < family.size() && open == family.size(); ++i)
                if (! hits[i])
                    open = i;
            if (open == family.size()) {
                if (chosen.size() < best_size) {
                    best = chosen;
                    best_size = chosen.size();
                }
                return;
            }
            auto lb = lower_bound();
            if (lb == infeasible || chosen.size() + lb >= best_size)
                return;
            if (++nodes > budget) {
                out_of_budget = true;
                return;
            }
            // Branch i takes the i-th vertex and bans the earlier ones.
            VertexSet newly_banned;
            for (auto v : family[open]) {
                if (banned[static_cast<std::size_t>(v)])
                    continue;
                chosen.push_back(v);
                pick(v, 1);
                run();
                pick(v, -1);
                chosen.pop_back();
                banned[static_cast<std::size_t>(v)] = 1;
                newly_banned.push_back(v);
                if (out_of_budget)
                    break;
            }
            for (auto v : newly_banned)
                banned[static_cast<std::size_t>(v)] = 0;
        }
    };

    auto check_family(const std::vector<VertexSet> & family, int n)
    {
        for (auto & f : family)
            for (auto v : f)
                if (v < 0 || v >= n)
                    throw Error(ErrorKind::invalid_vertex, "family member has a vertex outside 0.." + std::to_string(n - 1));
    }
}

auto min_transversal(const std::vector<VertexSet> & family, int n, std::size_t limit, std::uint64_t budget) -> TransversalResult
{
    check_family(family, n);
    TransversalResult result;
    auto members = minimal_members(family);
    if (members.empty()) {
        result.verdict = Verdict::yes;
        result.exact = true;
        return result;
    }
    if (members.front().empty()) {
        // Nothing hits the empty set.
        result.verdict = Verdict::yes;
        result.value = limit == std::numeric_limits<std::size_t>::max() ? limit : limit + 1;
        return result;
    }

    TransversalSearch search{members, std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(n)), budget};
    for (std::size_t i = 0; i < members.size(); ++i)
        for (auto v : members[i])
            search.containing[static_cast<std::size_t>(v)].push_back(i);
    search.hits.assign(members.size(), 0);
    search.banned.assign(static_cast<std::size_t>(n), 0);
    search.mark.assign(static_cast<std::size_t>(n), 0);
    search.best_size = limit == std::numeric_limits<std::size_t>::max() ? limit : limit + 1;
    search.run();

    result.nodes = search.nodes;
    result.verdict = search.out_of_budget ? Verdict::unknown : Verdict::yes;
    if (! search.best.empty()) {
        result.exact = ! search.out_of_budget;
        result.value = search.best.size();
        result.witness = search.best;
        std::sort(result.witness.begin(), result.witness.end());
    }
    else if (! search.out_of_budget)
        result.value = search.best_size;
    return result;
}

namespace {
    struct PackingSearch {
        const std::vector<VertexSet> & family;
        int n;
        std::size_t smallest;
        std::vector<std::vector<std::size_t>> by_min;
        std::size_t target;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        bool out_of_budget = false;
        std::vector<char> used{};
        std::vector<std::size_t> chosen{}, best{};

        void run(Vertex v, std::size_t free_from_v)
        {
            if (best.size() >= target || out_of_budget)
                return;
            while (v < n && used[static_cast<std::size_t>(v)])
                ++v;
            if (v >= n || chosen.size() + free_from_v / smallest <= best.size())
                return;
            if (++nodes > budget) {
                out_of_budget = true;
                return;
            }
            for (auto i : by_min[static_cast<std::size_t>(v)]) {
                auto & set = family[i];
                if (std::any_of(set.begin(), set.end(), [&](Vertex u) { return used[static_cast<std::size_t>(u)]; }))
                    continue;
                for (auto u : set)
                    used[static_cast<std::size_t>(u)] = 1;
                chosen.push_back(i);
                if (chosen.size() > best.size())
                    best = chosen;
                run(v + 1, free_from_v - set.size());
                chosen.pop_back();
                for (auto u : set)
                    used[static_cast<std::size_t>(u)] = 0;
                if (best.size() >= target || out_of_budget)
                    return;
            }
            run(v + 1, free_from_v - 1);
        }
    };
}

auto max_disjoint_sets(const std::vector<VertexSet> & family, int n, std::size_t target, std::uint64_t budget) -> PackingResult
{
    check_family(family, n);
    PackingResult result;
    std::size_t smallest = std::numeric_limits<std::size_t>::max();
    for (auto & f : family) {
        if (f.empty())
            throw Error(ErrorKind::invalid_argument, "packing members must be nonempty");
        smallest = std::min(smallest, f.size());
    }
    result.verdict = Verdict::yes;
    if (family.empty() || target == 0)
        return result;

    // Greedy start in family order.
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> greedy;
    for (std::size_t i = 0; i < family.size() && greedy.size() < target; ++i) {
        auto & set = family[i];
        if (std::any_of(set.begin(), set.end(), [&](Vertex u) { return used[static_cast<std::size_t>(u)]; }))
            continue;
        for (auto u : set)
            used[static_cast<std::size_t>(u)] = 1;
        greedy.push_back(i);
    }

    PackingSearch search{family, n, smallest, std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(n)), target, budget};
    for (std::size_t i = 0; i < family.size(); ++i)
        search.by_min[static_cast<std::size_t>(*std::min_element(family[i].begin(), family[i].end()))].push_back(i);
    search.used.assign(static_cast<std::size_t>(n), 0);
    search.best = greedy;
    search.target = std::min(target, static_cast<std::size_t>(n) / smallest);
    if (greedy.size() < search.target)
        search.run(0, static_cast<std::size_t>(n));

    result.nodes = search.nodes;
    result.verdict = search.out_of_budget ? Verdict::unknown : Verdict::yes;
    result.sets = search.best;
    std::sort(result.sets.begin(), result.sets.end());
    return result;
}

}
