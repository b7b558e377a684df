#include "tktile/patterns.hpp"
#include "tktile/embed.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace tktile {

TkCopy::TkCopy(int k, std::vector<Vertex> roles) :
    _k(k), _roles(std::move(roles))
{
    if (k < 2)
        throw Error(ErrorKind::invalid_uniformity, "T_k needs k >= 2");
    if (static_cast<int>(_roles.size()) != 2 * k - 1)
        throw Error(ErrorKind::invalid_arity, "a copy of T_k has 2k-1 vertices");
    auto uk = static_cast<std::size_t>(k);
    if (k == 2)
        // The triangle is fully symmetric: smallest vertex is the base.
        std::sort(_roles.begin(), _roles.end());
    else {
        std::sort(_roles.begin(), _roles.begin() + static_cast<long>(uk - 1));
        if (_roles[uk - 1] > _roles[uk])
            std::swap(_roles[uk - 1], _roles[uk]);
        std::sort(_roles.begin() + static_cast<long>(uk + 1), _roles.end());
    }
    _vertices = _roles;
    std::sort(_vertices.begin(), _vertices.end());
    if (! is_sorted_distinct(_vertices))
        throw Error(ErrorKind::invalid_argument, "copy roles must be distinct vertices");
}

auto TkCopy::edges() const -> std::array<Edge, 3>
{
    auto b = base();
    Edge e1(b.begin(), b.end()), e2(b.begin(), b.end());
    e1.push_back(apex1());
    e2.push_back(apex2());
    auto r = rest();
    Edge e3(r.begin(), r.end());
    e3.push_back(apex1());
    e3.push_back(apex2());
    for (auto * e : {&e1, &e2, &e3})
        std::sort(e->begin(), e->end());
    return {std::move(e1), std::move(e2), std::move(e3)};
}

auto Tiling::covered() const -> std::size_t
{
    std::size_t total = 0;
    for (auto & c : copies)
        total += c.vertices().size();
    return total;
}

auto tk_pattern(int k) -> KGraph
{
    if (k < 2)
        throw Error(ErrorKind::invalid_uniformity, "T_k needs k >= 2, got " + std::to_string(k));
    Edge e1, e2, e3;
    for (int i = 0; i < k - 1; ++i) {
        e1.push_back(i);
        e2.push_back(i);
    }
    e1.push_back(k - 1);
    e2.push_back(k);
    for (int i = k - 1; i < 2 * k - 1; ++i)
        e3.push_back(i);
    return KGraph(2 * k - 1, k, {e1, e2, e3});
}

auto automorphism_count(const KGraph & pattern) -> std::uint64_t
{
    const int n = pattern.n();
    if (n > 10)
        throw Error(ErrorKind::guard_exceeded, "brute-force automorphisms limited to 10 vertices");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    Edge image;
    do {
        bool ok = true;
        for (auto & e : pattern.edges()) {
            image.clear();
            for (auto v : e)
                image.push_back(perm[static_cast<std::size_t>(v)]);
            std::sort(image.begin(), image.end());
            if (! pattern.has_edge(image)) {
                ok = false;
                break;
            }
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

auto supports_tk(const KGraph & h, std::span<const Vertex> s) -> std::optional<TkCopy>
{
    const int k = h.k();
    if (static_cast<int>(s.size()) != 2 * k - 1)
        throw Error(ErrorKind::invalid_arity, "support test needs a (2k-1)-set");
    VertexSet set(s.begin(), s.end());
    std::sort(set.begin(), set.end());
    if (! is_sorted_distinct(set))
        throw Error(ErrorKind::invalid_arity, "support test needs distinct vertices");
    if (set.front() < 0 || set.back() >= h.n())
        throw Error(ErrorKind::invalid_vertex, "vertex out of range");

    std::optional<TkCopy> found;
    for_each_combination(set, k - 1, [&](std::span<const int> base) {
        auto others = set_difference(set, base);
        // Apex candidates: vertices of S completing the base to an edge.
        VertexSet apexes;
        Edge probe(base.begin(), base.end());
        probe.push_back(0);
        for (auto x : others) {
            probe.back() = x;
            Edge sorted = probe;
            std::sort(sorted.begin(), sorted.end());
            if (h.has_edge(sorted))
                apexes.push_back(x);
        }
        // The remaining k vertices are both apexes plus the rest of the spine.
        if (apexes.size() < 2 || ! h.has_edge(others))
            return true;
        std::vector<Vertex> roles(base.begin(), base.end());
        roles.push_back(apexes[0]);
        roles.push_back(apexes[1]);
        for (auto x : others)
            if (x != apexes[0] && x != apexes[1])
                roles.push_back(x);
        found.emplace(k, std::move(roles));
        return false;
    });
    return found;
}

namespace {
    struct PairIndex {
        int n;
        std::vector<std::vector<Edge>> rests;

        auto at(Vertex a, Vertex b) const -> const std::vector<Edge> &
        {
            return rests[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)];
        }
    };

    /// For every pair a<b, the (k-2)-sets R with {a,b} + R an edge inside `allowed`.
    auto build_pair_index(const KGraph & h, const std::vector<char> & allowed) -> PairIndex
    {
        const int n = h.n(), k = h.k();
        PairIndex index{n, std::vector<std::vector<Edge>>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n))};
        for (auto & e : h.edges()) {
            if (! std::all_of(e.begin(), e.end(), [&](Vertex v) { return allowed[static_cast<std::size_t>(v)]; }))
                continue;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    Edge rest;
                    for (int l = 0; l < k; ++l)
                        if (l != i && l != j)
                            rest.push_back(e[static_cast<std::size_t>(l)]);
                    index.rests[static_cast<std::size_t>(e[static_cast<std::size_t>(i)]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e[static_cast<std::size_t>(j)])]
                        .push_back(std::move(rest));
                }
        }
        return index;
    }

    auto disjoint(std::span<const Vertex> a, std::span<const Vertex> b) -> bool
    {
        return set_intersection_size(a, b) == 0;
    }
}

auto enumerate_tk_copies(const KGraph & h, const EnumerateOptions & options) -> std::vector<TkCopy>
{
    const int n = h.n(), k = h.k();
    if (options.cap == 0)
        throw Error(ErrorKind::invalid_argument, "copy cap must be positive");
    std::vector<char> allowed(static_cast<std::size_t>(n), options.restrict_to ? 0 : 1);
    VertexSet pool;
    if (options.restrict_to) {
        for (auto v : *options.restrict_to) {
            if (v < 0 || v >= n)
                throw Error(ErrorKind::invalid_vertex, "restriction vertex out of range");
            allowed[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (allowed[static_cast<std::size_t>(v)])
            pool.push_back(v);

    const unsigned workers = std::max(1u, options.workers);
    std::atomic<std::uint64_t> count{0};
    std::atomic<bool> over{false};
    std::vector<std::vector<TkCopy>> parts(workers);

    if (k == 2) {
        for_each_combination(pool, 3, [&](std::span<const int> t) {
            if (h.has_edge(std::array{t[0], t[1]}) && h.has_edge(std::array{t[0], t[2]}) && h.has_edge(std::array{t[1], t[2]})) {
                if (++count > options.cap) {
                    over = true;
                    return false;
                }
                parts[0].emplace_back(2, std::vector<Vertex>(t.begin(), t.end()));
            }
            return true;
        });
    }
    else {
        auto pairs = build_pair_index(h, allowed);
        auto work = [&](unsigned w) {
            auto & out = parts[w];
            VertexSet base(static_cast<std::size_t>(k - 1));
            for (std::size_t fi = w; fi < pool.size() && ! over; fi += workers) {
                base[0] = pool[fi];
                std::span<const int> rest(pool.data() + fi + 1, pool.size() - fi - 1);
                for_each_combination(rest, k - 2, [&](std::span<const int> c) {
                    std::copy(c.begin(), c.end(), base.begin() + 1);
                    VertexSet nb;
                    for (auto x : h.neighborhood(base))
                        if (allowed[static_cast<std::size_t>(x)])
                            nb.push_back(x);
                    for (std::size_t i = 0; i < nb.size(); ++i)
                        for (std::size_t j = i + 1; j < nb.size(); ++j)
                            for (auto & r : pairs.at(nb[i], nb[j])) {
                                if (! disjoint(r, base))
                                    continue;
                                if (++count > options.cap) {
                                    over = true;
                                    return false;
                                }
                                std::vector<Vertex> roles(base);
                                roles.push_back(nb[i]);
                                roles.push_back(nb[j]);
                                roles.insert(roles.end(), r.begin(), r.end());
                                out.emplace_back(k, std::move(roles));
                            }
                    return true;
                });
            }
        };
        if (workers == 1)
            work(0);
        else {
            std::vector<std::thread> threads;
            for (unsigned w = 0; w < workers; ++w)
                threads.emplace_back(work, w);
            for (auto & t : threads)
                t.join();
        }
    }
    if (over)
        throw BudgetExceeded("T_k copy enumeration exceeded cap " + std::to_string(options.cap), count.load() - 1);

    std::vector<TkCopy> all;
    for (auto & p : parts)
        std::move(p.begin(), p.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end());
    return all;
}

auto supporting_sets(std::span<const TkCopy> copies) -> std::vector<VertexSet>
{
    std::vector<VertexSet> sets;
    for (auto & c : copies)
        if (sets.empty() || sets.back() != c.vertices())
            sets.push_back(c.vertices());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

namespace {
    auto edge_index(const KGraph & h, const Edge & e) -> std::size_t
    {
        auto it = std::lower_bound(h.edges().begin(), h.edges().end(), e);
        return static_cast<std::size_t>(it - h.edges().begin());
    }
}

void for_each_tight_2path(const KGraph & h, const std::function<void(std::size_t, std::size_t)> & fn)
{
    auto pool = iota_vertices(h.n());
    for_each_combination(pool, h.k() - 1, [&](std::span<const int> s) {
        auto & nb = h.neighborhood(s);
        std::vector<std::size_t> ids;
        for (auto x : nb) {
            Edge e(s.begin(), s.end());
            e.push_back(x);
            std::sort(e.begin(), e.end());
            ids.push_back(edge_index(h, e));
        }
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                fn(ids[i], ids[j]);
        return true;
    });
}

auto tight_2paths(const KGraph & h, const std::vector<int> * coloring) -> TightPathCount
{
    if (coloring && coloring->size() != h.edge_count())
        throw Error(ErrorKind::invalid_coloring, "coloring has " + std::to_string(coloring->size()) + " entries for " + std::to_string(h.edge_count()) + " edges");
    TightPathCount result;
    // Two distinct edges share exactly k-1 vertices iff they share a unique (k-1)-set.
    auto pool = iota_vertices(h.n());
    for_each_combination(pool, h.k() - 1, [&](std::span<const int> s) {
        auto & nb = h.neighborhood(s);
        std::uint64_t d = nb.size();
        result.total += d * (d - (d > 0)) / 2;
        if (coloring) {
            std::vector<int> colors;
            for (auto x : nb) {
                Edge e(s.begin(), s.end());
                e.push_back(x);
                std::sort(e.begin(), e.end());
                colors.push_back((*coloring)[edge_index(h, e)]);
            }
            std::sort(colors.begin(), colors.end());
            std::uint64_t same = 0;
            for (std::size_t i = 0; i < colors.size();) {
                std::size_t j = i;
                while (j < colors.size() && colors[j] == colors[i])
                    ++j;
                std::uint64_t c = j - i;
                same += c * (c - 1) / 2;
                i = j;
            }
            result.rainbow += d * (d - (d > 0)) / 2 - same;
        }
        return true;
    });
    return result;
}

auto blowup(const KGraph & f, int t) -> KGraph
{
    if (t < 1)
        throw Error(ErrorKind::invalid_argument, "blowup factor must be at least 1");
    const int k = f.k();
    std::vector<Edge> edges;
    for (auto & e : f.edges()) {
        // Odometer over the t^k transversal choices.
        std::vector<int> pick(static_cast<std::size_t>(k), 0);
        while (true) {
            Edge image;
            for (int i = 0; i < k; ++i)
                image.push_back(e[static_cast<std::size_t>(i)] * t + pick[static_cast<std::size_t>(i)]);
            edges.push_back(std::move(image));
            int i = k - 1;
            while (i >= 0 && ++pick[static_cast<std::size_t>(i)] == t)
                pick[static_cast<std::size_t>(i--)] = 0;
            if (i < 0)
                break;
        }
    }
    return KGraph(f.n() * t, k, std::move(edges));
}

auto find_blowup(const KGraph & h, const KGraph & f, int t, std::uint64_t budget) -> std::optional<std::vector<VertexSet>>
{
    if (f.k() != h.k())
        throw Error(ErrorKind::invalid_uniformity, "pattern and host uniformities differ");
    KGraph target = blowup(f, t);
    EmbeddingProblem problem;
    problem.pattern = &target;
    problem.hosts = {&h};
    problem.edge_host.assign(target.edge_count(), 0);
    auto result = find_embedding(problem, budget);
    if (result.verdict == Verdict::unknown)
        throw BudgetExceeded("blowup search", result.nodes);
    if (result.verdict == Verdict::no)
        return std::nullopt;
    std::vector<VertexSet> classes(static_cast<std::size_t>(f.n()));
    for (int p = 0; p < target.n(); ++p)
        classes[static_cast<std::size_t>(p / t)].push_back(result.map[static_cast<std::size_t>(p)]);
    for (auto & c : classes)
        std::sort(c.begin(), c.end());
    return classes;
}

}
