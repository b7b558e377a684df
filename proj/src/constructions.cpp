#include "tktile/constructions.hpp"

#include <algorithm>

namespace tktile {

auto empty_pair_graph(int n) -> PairGraph
{
    return KGraph::edgeless(n, 2);
}

auto max_degree(const PairGraph & b) -> std::size_t
{
    if (b.k() != 2)
        throw Error(ErrorKind::invalid_uniformity, "pair graph must be 2-uniform");
    std::vector<std::size_t> deg(static_cast<std::size_t>(b.n()), 0);
    for (auto & e : b.edges()) {
        ++deg[static_cast<std::size_t>(e[0])];
        ++deg[static_cast<std::size_t>(e[1])];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

auto extremal_construction(int k, int n) -> ExtremalInstance
{
    if (k < 3)
        throw Error(ErrorKind::invalid_uniformity, "extremal construction needs k >= 3");
    const int s = 2 * k - 1;
    if (n < s || n % s != 0)
        throw Error(ErrorKind::divisibility, "n = " + std::to_string(n) + " must be a positive multiple of " + std::to_string(s));
    const int a_size = 2 * n / s - 1;
    ExtremalInstance out{KGraph::edgeless(0, k), {}, {}};
    for (Vertex v = 0; v < n; ++v)
        (v < a_size ? out.a : out.b).push_back(v);
    std::vector<Edge> edges;
    auto pool = iota_vertices(n);
    for_each_combination(pool, k, [&](std::span<const int> e) {
        if (e[0] < a_size)
            edges.emplace_back(e.begin(), e.end());
        return true;
    });
    out.graph = KGraph(n, k, std::move(edges));
    return out;
}

auto augmented_blowup(const KGraph & h, const PairGraph & b, int guard) -> AugmentedBlowup
{
    if (b.k() != 2)
        throw Error(ErrorKind::invalid_uniformity, "B must be 2-uniform");
    if (b.n() != h.n())
        throw Error(ErrorKind::invalid_dimension, "B and H must share a vertex set");
    if (h.n() > guard)
        throw Error(ErrorKind::guard_exceeded,
            "augmented blowup limited to n <= " + std::to_string(guard) + " (got " + std::to_string(h.n()) + ")");
    const int k = h.k();
    const int c = 2 * k - 1;
    const int n2 = c * h.n();
    auto pool = iota_vertices(n2);

    std::vector<Edge> edges;
    std::vector<Vertex> projection;
    for_each_combination(pool, k, [&](std::span<const int> e) {
        projection.clear();
        for (auto v : e)
            projection.push_back(v / c);
        // Clones of one vertex are consecutive, so the projection is sorted.
        if (std::adjacent_find(projection.begin(), projection.end()) != projection.end() || h.has_edge(projection))
            edges.emplace_back(e.begin(), e.end());
        return true;
    });

    std::vector<Edge> pairs;
    for_each_combination(pool, 2, [&](std::span<const int> e) {
        Vertex u = e[0] / c, v = e[1] / c;
        if (u == v || b.has_edge(std::vector<Vertex>{u, v}))
            pairs.push_back({e[0], e[1]});
        return true;
    });
    return {KGraph(n2, k, std::move(edges)), KGraph(n2, 2, std::move(pairs))};
}

auto random_with_codegree(int n, int k, int delta_target, std::uint64_t seed, int max_rounds) -> KGraph
{
    if (k < 2)
        throw Error(ErrorKind::invalid_uniformity, "k must be at least 2");
    if (n < k)
        throw Error(ErrorKind::too_few_vertices, "need n >= k");
    if (delta_target < 0 || delta_target > n - k + 1)
        throw Error(ErrorKind::invalid_argument, "codegree target must lie in [0, n-k+1]");
    if (binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) > (1ULL << 26))
        throw Error(ErrorKind::guard_exceeded, "C(n,k) too large for the codegree generator");

    BinomialTable table(n, k);
    std::vector<char> present(table(n, k), 0);
    std::vector<int> codeg(table(n, k - 1), 0);
    SplitMix64 rng(seed);
    auto pool = iota_vertices(n);

    std::vector<int> candidates;
    std::vector<int> edge(static_cast<std::size_t>(k));
    std::vector<int> sub(static_cast<std::size_t>(k - 1));
    auto add = [&](std::span<const int> e) {
        present[table.colex_rank(e)] = 1;
        for (std::size_t skip = 0; skip < e.size(); ++skip) {
            sub.clear();
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != skip)
                    sub.push_back(e[i]);
            ++codeg[table.colex_rank(sub)];
        }
    };

    int achieved = 0;
    for (int round = 0; round <= max_rounds; ++round) {
        achieved = INT32_MAX;
        bool deficient = false;
        for_each_combination(pool, k - 1, [&](std::span<const int> s) {
            achieved = std::min(achieved, codeg[table.colex_rank(s)]);
            if (codeg[table.colex_rank(s)] < delta_target)
                deficient = true;
            return ! deficient;
        });
        if (! deficient)
            break;
        if (round == max_rounds) {
            for_each_combination(pool, k - 1, [&](std::span<const int> s) {
                achieved = std::min(achieved, codeg[table.colex_rank(s)]);
                return true;
            });
            throw Error(ErrorKind::generation_failed,
                "codegree " + std::to_string(achieved) + " after " + std::to_string(max_rounds) + " rounds (target "
                    + std::to_string(delta_target) + ")");
        }
        for_each_combination(pool, k - 1, [&](std::span<const int> s) {
            if (codeg[table.colex_rank(s)] >= delta_target)
                return true;
            candidates.clear();
            for (Vertex v = 0; v < n; ++v) {
                if (std::binary_search(s.begin(), s.end(), v))
                    continue;
                edge.assign(s.begin(), s.end());
                edge.insert(std::upper_bound(edge.begin(), edge.end(), v), v);
                if (! present[table.colex_rank(edge)])
                    candidates.push_back(v);
            }
            Vertex v = candidates[rng.below(candidates.size())];
            edge.assign(s.begin(), s.end());
            edge.insert(std::upper_bound(edge.begin(), edge.end(), v), v);
            add(edge);
            return true;
        });
    }

    std::vector<Edge> edges;
    for_each_combination(pool, k, [&](std::span<const int> e) {
        if (present[table.colex_rank(e)])
            edges.emplace_back(e.begin(), e.end());
        return true;
    });
    return KGraph(n, k, std::move(edges));
}

auto random_kgraph(int n, int k, const Rational & probability, std::uint64_t seed) -> KGraph
{
    // The sampler draws below the denominator, so it must be the reduced one.
    Rational p = probability;
    p.canonicalize();
    if (k < 2)
        throw Error(ErrorKind::invalid_uniformity, "k must be at least 2");
    if (n < 0)
        throw Error(ErrorKind::invalid_argument, "n must be nonnegative");
    if (p < 0 || p > 1)
        throw Error(ErrorKind::invalid_argument, "p must lie in [0, 1]");
    if (! p.get_den().fits_ulong_p())
        throw Error(ErrorKind::invalid_argument, "p denominator too large");
    const std::uint64_t den = p.get_den().get_ui();
    const std::uint64_t num = p.get_num().get_ui();
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    auto pool = iota_vertices(n);
    for_each_combination(pool, k, [&](std::span<const int> e) {
        if (rng.below(den) < num)
            edges.emplace_back(e.begin(), e.end());
        return true;
    });
    return KGraph(n, k, std::move(edges));
}

auto dominates(std::span<const Vertex> u, std::span<const Vertex> w) -> bool
{
    if (u.size() != w.size())
        throw Error(ErrorKind::invalid_arity, "domination compares tuples of equal length");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (w[i] > u[i])
            return false;
    return true;
}

}
