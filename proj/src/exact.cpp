#include "tktile/exact.hpp"

#include "tktile/exact_cover.hpp"
#include "tktile/fractional.hpp"
#include "tktile/hitting_set.hpp"
#include "tktile/validate.hpp"

#include <algorithm>
#include <set>

namespace tktile {

namespace {
    struct SetRows {
        std::vector<VertexSet> sets;
        std::vector<TkCopy> witnesses;
    };

    /// One row per supporting set, witnessed by its least canonical copy.
    auto supporting_rows(const KGraph & h, const ExactOptions & options) -> SetRows
    {
        EnumerateOptions eo;
        eo.cap = options.cap;
        eo.workers = options.workers;
        SetRows rows;
        for (auto & c : enumerate_tk_copies(h, eo))
            if (rows.sets.empty() || rows.sets.back() != c.vertices()) {
                rows.sets.push_back(c.vertices());
                rows.witnesses.push_back(c);
            }
        return rows;
    }

    /// Depth-first search that builds rows on demand: the lowest uncovered
    /// vertex is matched with every (2k-2)-set of later uncovered vertices.
    struct LazyTiler {
        const KGraph & h;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        bool out_of_budget = false;
        std::vector<char> used{};
        std::vector<TkCopy> chosen{};

        auto run() -> bool
        {
            Vertex v = 0;
            while (v < h.n() && used[static_cast<std::size_t>(v)])
                ++v;
            if (v == h.n())
                return true;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            VertexSet pool;
            for (Vertex u = v + 1; u < h.n(); ++u)
                if (! used[static_cast<std::size_t>(u)])
                    pool.push_back(u);
            bool found = false;
            VertexSet set;
            for_each_combination(pool, 2 * h.k() - 2, [&](std::span<const int> rest) {
                set.assign(1, v);
                set.insert(set.end(), rest.begin(), rest.end());
                auto copy = supports_tk(h, set);
                if (! copy)
                    return true;
                for (auto u : set)
                    used[static_cast<std::size_t>(u)] = 1;
                chosen.push_back(*copy);
                if (run()) {
                    found = true;
                    return false;
                }
                chosen.pop_back();
                for (auto u : set)
                    used[static_cast<std::size_t>(u)] = 0;
                return ! out_of_budget;
            });
            return found;
        }
    };
}

auto perfect_tiling(const KGraph & h, const ExactOptions & options) -> TilingDecision
{
    TilingDecision d;
    const int s = 2 * h.k() - 1;
    if (h.n() % s != 0) {
        d.verdict = Verdict::no;
        d.reason = "divisibility";
        return d;
    }

    std::optional<SetRows> rows;
    try {
        rows = supporting_rows(h, options);
    }
    catch (const BudgetExceeded &) {
        d.lazy = true;
    }

    if (d.lazy) {
        LazyTiler tiler{h, options.budget};
        tiler.used.assign(static_cast<std::size_t>(h.n()), 0);
        bool found = tiler.run();
        d.nodes = tiler.nodes;
        if (found) {
            d.verdict = Verdict::yes;
            std::sort(tiler.chosen.begin(), tiler.chosen.end());
            d.tiling = Tiling{tiler.chosen};
        }
        else
            d.verdict = tiler.out_of_budget ? Verdict::unknown : Verdict::no;
        return d;
    }

    ExactCover cover(h.n(), rows->sets);
    auto r = cover.solve(options.budget);
    d.nodes = r.nodes;
    d.verdict = r.verdict;
    if (r.verdict == Verdict::yes) {
        Tiling t;
        for (auto i : r.rows)
            t.copies.push_back(rows->witnesses[i]);
        std::sort(t.copies.begin(), t.copies.end());
        d.tiling = std::move(t);
    }
    return d;
}

auto max_tiling(const KGraph & h, const ExactOptions & options) -> MaxTilingResult
{
    MaxTilingResult result;
    const int s = 2 * h.k() - 1;
    auto rows = supporting_rows(h, options);

    FractionalOptions fo;
    fo.cap = options.cap;
    fo.workers = options.workers;
    result.lp_bound = fractional_packing_number(h, fo).value;
    Integer lp_floor = result.lp_bound.get_num() / result.lp_bound.get_den();
    std::size_t hi = static_cast<std::size_t>(h.n() / s);
    if (lp_floor < static_cast<unsigned long>(hi))
        hi = lp_floor.get_ui();

    auto packing = max_disjoint_sets(rows.sets, h.n(), hi, options.budget);
    result.nodes = packing.nodes;
    result.lo = packing.sets.size();
    result.hi = packing.verdict == Verdict::yes ? result.lo : hi;
    result.verdict = packing.verdict;
    for (auto i : packing.sets)
        result.tiling.copies.push_back(rows.witnesses[i]);
    std::sort(result.tiling.copies.begin(), result.tiling.copies.end());
    return result;
}

namespace {
    auto check_classes(const KGraph & j, const std::vector<VertexSet> & classes) -> std::vector<int>
    {
        if (classes.size() != static_cast<std::size_t>(j.k()))
            throw Error(ErrorKind::invalid_partite_structure, "need exactly k vertex classes");
        std::vector<int> cls(static_cast<std::size_t>(j.n()), -1);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c].size() != classes[0].size())
                throw Error(ErrorKind::invalid_partite_structure, "vertex classes must have equal sizes");
            for (auto v : classes[c]) {
                if (v < 0 || v >= j.n())
                    throw Error(ErrorKind::invalid_vertex, "class vertex out of range");
                if (cls[static_cast<std::size_t>(v)] >= 0)
                    throw Error(ErrorKind::invalid_partite_structure, "vertex " + std::to_string(v) + " is in two classes");
                cls[static_cast<std::size_t>(v)] = static_cast<int>(c);
            }
        }
        for (int v = 0; v < j.n(); ++v)
            if (cls[static_cast<std::size_t>(v)] < 0)
                throw Error(ErrorKind::invalid_partite_structure, "vertex " + std::to_string(v) + " is in no class");
        for (auto & e : j.edges()) {
            std::vector<int> seen;
            for (auto v : e)
                seen.push_back(cls[static_cast<std::size_t>(v)]);
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
                throw Error(ErrorKind::invalid_partite_structure, "an edge meets some class twice");
        }
        return cls;
    }
}

auto perfect_matching(const KGraph & j, std::uint64_t budget) -> MatchingResult
{
    MatchingResult m;
    if (j.n() % j.k() != 0) {
        m.verdict = Verdict::no;
        return m;
    }
    ExactCover cover(j.n(), j.edges());
    auto r = cover.solve(budget);
    m.verdict = r.verdict;
    m.nodes = r.nodes;
    for (auto i : r.rows)
        m.edges.push_back(j.edges()[i]);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

auto kpartite_perfect_matching(const KGraph & j, const std::vector<VertexSet> & classes, std::uint64_t budget) -> MatchingResult
{
    check_classes(j, classes);
    return perfect_matching(j, budget);
}

auto dh_condition(const KGraph & j, const std::vector<VertexSet> & classes) -> DHCondition
{
    check_classes(j, classes);
    const int k = j.k();
    const long n = static_cast<long>(classes[0].size());
    DHCondition d;
    d.threshold = Rational(k - 1, k) * pow(Rational(n), static_cast<unsigned>(k - 1));
    d.holds = true;
    for (Vertex v = 0; v < j.n(); ++v) {
        auto deg = j.degree(v);
        if (d.worst_vertex < 0 || deg < d.worst_degree) {
            d.worst_vertex = v;
            d.worst_degree = deg;
        }
    }
    if (d.worst_vertex >= 0)
        d.holds = Rational(static_cast<long>(d.worst_degree)) >= d.threshold;
    return d;
}

auto corollary_thresholds(int k, int n, const Rational & beta) -> CorollaryThresholds
{
    CorollaryThresholds t;
    t.c1 = (Rational(1) - beta) * Rational(binomial((2L * k - 3) * n, 2L * k - 3) * binomial(2L * n, 2));
    t.c2 = pow(Rational(n), static_cast<unsigned>(2 * k - 2)) / pow(Rational(2 * k - 1), static_cast<unsigned>((k + 1) * (k + 1)));
    return t;
}

auto classify_good_bad(const KGraph & h, std::span<const Vertex> s, const Rational & gamma) -> GoodBad
{
    VertexSet set(s.begin(), s.end());
    std::sort(set.begin(), set.end());
    if (! is_sorted_distinct(set) || (! set.empty() && (set.front() < 0 || set.back() >= h.n())))
        throw Error(ErrorKind::invalid_vertex, "S must be distinct vertices of H");
    const RationalRoot root_gamma{gamma, 2};
    const Rational n(h.n());
    GoodBad out;
    for_each_combination(set, h.k() - 1, [&](std::span<const int> q) {
        std::size_t inside = set_intersection_size(h.neighborhood(q), set);
        if (compare(Rational(static_cast<long>(inside)), root_gamma, n) > 0)
            out.bad.emplace_back(q.begin(), q.end());
        else
            out.good.emplace_back(q.begin(), q.end());
        return true;
    });
    Rational n_pow = pow(n, static_cast<unsigned>(h.k() - 1));
    out.bad_bound = RationalRoot{gamma * n_pow * n_pow, 2};
    out.within_bound = compare(Rational(static_cast<long>(out.bad.size())), root_gamma, n_pow) <= 0;
    return out;
}

auto build_auxiliary_J(const KGraph & h, std::span<const Vertex> a, std::span<const Vertex> b, std::uint64_t cap) -> AuxiliaryJ
{
    const int k = h.k();
    VertexSet as(a.begin(), a.end()), bs(b.begin(), b.end());
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());
    if (set_intersection_size(as, bs) != 0 || as.size() + bs.size() != static_cast<std::size_t>(h.n())
        || ! is_sorted_distinct(as) || ! is_sorted_distinct(bs))
        throw Error(ErrorKind::invalid_argument, "A' and B' must partition V(H')");

    std::vector<std::pair<VertexSet, TkCopy>> found;
    for_each_combination(as, 2 * k - 3, [&](std::span<const int> x) {
        for_each_combination(bs, 2, [&](std::span<const int> y) {
            VertexSet set = set_union(x, y);
            if (auto copy = supports_tk(h, set)) {
                if (found.size() >= cap)
                    throw BudgetExceeded("auxiliary J exceeded cap " + std::to_string(cap), found.size());
                found.emplace_back(std::move(set), *copy);
            }
            return true;
        });
        return true;
    });
    std::sort(found.begin(), found.end(), [](auto & l, auto & r) { return l.first < r.first; });
    AuxiliaryJ j{KGraph::edgeless(h.n(), 2 * k - 1), as, bs, {}};
    std::vector<Edge> edges;
    for (auto & [set, copy] : found) {
        edges.push_back(set);
        j.copies.push_back(copy);
    }
    j.graph = KGraph(h.n(), 2 * k - 1, std::move(edges));
    return j;
}

namespace {
    void note(StageReport & r, std::string key, std::string value)
    {
        r.diagnostics.emplace_back(std::move(key), std::move(value));
    }

    auto show(std::span<const Vertex> s) -> std::string
    {
        std::string out = "[";
        for (std::size_t i = 0; i < s.size(); ++i)
            out += (i ? "," : "") + std::to_string(s[i]);
        return out + "]";
    }

    auto contains(std::span<const Vertex> sorted, Vertex v) -> bool
    {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    }

    /// Exactly `need` pairwise disjoint edges from `edges`, first in index order.
    struct DisjointEdges {
        const std::vector<Edge> & edges;
        std::size_t need;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        bool out_of_budget = false;
        std::vector<char> used{};
        std::vector<std::size_t> chosen{};

        auto run(std::size_t from) -> bool
        {
            if (chosen.size() == need)
                return true;
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            for (std::size_t i = from; i + (need - chosen.size()) <= edges.size(); ++i) {
                auto & e = edges[i];
                if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return used[static_cast<std::size_t>(v)]; }))
                    continue;
                for (auto v : e)
                    used[static_cast<std::size_t>(v)] = 1;
                chosen.push_back(i);
                if (run(i + 1))
                    return true;
                chosen.pop_back();
                for (auto v : e)
                    used[static_cast<std::size_t>(v)] = 0;
                if (out_of_budget)
                    return false;
            }
            return false;
        }
    };
}

auto extremal_pipeline(const KGraph & h, const Rational & gamma, const PipelineOptions & options) -> PipelineResult
{
    const int k = h.k(), n = h.n(), s = 2 * k - 1;
    if (n % s != 0)
        throw Error(ErrorKind::divisibility, "the pipeline needs (2k-1) | n");
    if (gamma < 0 || gamma > 1)
        throw Error(ErrorKind::invalid_argument, "gamma must lie in [0, 1]");
    PipelineResult result;
    const Rational rn(n);
    const RationalRoot gamma_prime = options.gamma_prime ? RationalRoot::of(*options.gamma_prime) : RationalRoot{gamma, 4};
    const RationalRoot beta = options.beta ? RationalRoot::of(*options.beta) : RationalRoot{gamma, 8};

    auto fail = [&](StageReport report, Verdict verdict = Verdict::no) {
        report.ok = false;
        result.stages.push_back(std::move(report));
        result.verdict = verdict;
        if (options.fallback) {
            ExactOptions eo;
            eo.budget = options.budget;
            auto d = perfect_tiling(h, eo);
            if (d.verdict == Verdict::yes) {
                result.tiling = d.tiling;
                result.used_fallback = true;
                result.verdict = Verdict::yes;
            }
        }
        return result;
    };
    auto pass = [&](StageReport report) {
        report.ok = true;
        result.stages.push_back(std::move(report));
    };

    // witness
    StageReport w{"witness"};
    VertexSet S;
    if (options.witness) {
        S = *options.witness;
        std::sort(S.begin(), S.end());
        if (! is_sorted_distinct(S) || (! S.empty() && (S.front() < 0 || S.back() >= n)))
            throw Error(ErrorKind::invalid_vertex, "witness must be distinct vertices of H");
        note(w, "source", "supplied");
        Integer total = binomial(static_cast<long>(S.size()), k);
        Rational d = total == 0 ? Rational(0) : Rational(Integer(static_cast<unsigned long>(induced_edge_count(h, S)))) / Rational(total);
        note(w, "density", to_pq_string(d));
        if (d > gamma) {
            note(w, "error", "supplied set has density above gamma");
            return fail(std::move(w));
        }
    }
    else {
        ExtremalOptions eo;
        eo.budget = options.budget;
        try {
            auto r = is_gamma_extremal(h, gamma, eo);
            if (r.verdict != Verdict::yes) {
                note(w, "error", "H is not gamma-extremal");
                return fail(std::move(w));
            }
            S = *r.witness;
            note(w, "source", "exhaustive search");
        }
        catch (const BudgetExceeded & e) {
            note(w, "error", e.what());
            return fail(std::move(w), Verdict::unknown);
        }
    }
    note(w, "S", show(S));
    pass(std::move(w));

    // good-bad
    StageReport gb{"good-bad"};
    auto classes = classify_good_bad(h, S, gamma);
    std::set<VertexSet> good(classes.good.begin(), classes.good.end());
    note(gb, "good", std::to_string(classes.good.size()));
    note(gb, "bad", std::to_string(classes.bad.size()));
    note(gb, "bad_bound", classes.bad_bound.to_string());
    note(gb, "within_bound", classes.within_bound ? "true" : "false");
    if (! classes.within_bound)
        return fail(std::move(gb));
    pass(std::move(gb));

    // X
    StageReport xs{"X"};
    VertexSet X;
    const Rational x_threshold = pow(rn, static_cast<unsigned>(k - 1)) / pow(Rational(s), static_cast<unsigned>(k));
    for (Vertex v = 0; v < n; ++v) {
        if (contains(S, v))
            continue;
        std::size_t count = 0;
        VertexSet e;
        for_each_combination(S, k - 1, [&](std::span<const int> q) {
            e.assign(q.begin(), q.end());
            e.insert(std::upper_bound(e.begin(), e.end(), v), v);
            count += h.has_edge(e);
            return true;
        });
        if (Rational(static_cast<long>(count)) < x_threshold)
            X.push_back(v);
    }
    note(xs, "threshold", to_pq_string(x_threshold));
    note(xs, "X", show(X));
    pass(std::move(xs));

    VertexSet A = set_union(S, X), B = set_difference(iota_vertices(n), A);

    // matching-M
    StageReport ms{"matching-M"};
    std::vector<Edge> candidates;
    std::vector<VertexSet> good_base;
    for (auto & e : h.edges()) {
        if (! std::all_of(e.begin(), e.end(), [&](Vertex v) { return contains(A, v); }))
            continue;
        std::optional<VertexSet> least;
        for_each_combination(e, k - 1, [&](std::span<const int> q) {
            VertexSet qs(q.begin(), q.end());
            if (good.count(qs)) {
                least = qs;
                return false;
            }
            return true;
        });
        if (least) {
            candidates.push_back(e);
            good_base.push_back(*least);
        }
    }
    DisjointEdges matcher{candidates, X.size(), options.budget};
    matcher.used.assign(static_cast<std::size_t>(n), 0);
    bool matched = matcher.run(0);
    note(ms, "candidates", std::to_string(candidates.size()));
    note(ms, "needed", std::to_string(X.size()));
    if (! matched) {
        note(ms, "error", matcher.out_of_budget ? "budget exhausted" : "no matching of size |X| with good bases");
        return fail(std::move(ms), matcher.out_of_budget ? Verdict::unknown : Verdict::no);
    }
    VertexSet vm;
    for (auto i : matcher.chosen)
        vm.insert(vm.end(), candidates[i].begin(), candidates[i].end());
    std::sort(vm.begin(), vm.end());
    note(ms, "M", std::to_string(matcher.chosen.size()) + " edges");
    pass(std::move(ms));

    // Tk-for-X
    StageReport tx{"Tk-for-X"};
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<TkCopy> x_copies;
    int case1 = 0, case2 = 0;
    for (auto i : matcher.chosen) {
        const auto & u = good_base[i];
        Vertex wv = set_difference(candidates[i], u).front();
        VertexSet pool;
        for (auto v : A)
            if (! contains(vm, v) && ! used[static_cast<std::size_t>(v)])
                pool.push_back(v);
        std::optional<TkCopy> made;
        for_each_combination(pool, k - 2, [&](std::span<const int> z) {
            VertexSet zw(z.begin(), z.end());
            zw.insert(std::upper_bound(zw.begin(), zw.end(), wv), wv);
            auto & nzw = h.neighborhood(zw);
            std::size_t in_b = set_intersection_size(nzw, B);
            if (compare(Rational(static_cast<long>(in_b)), gamma_prime, rn) >= 0) {
                auto & nu = h.neighborhood(u);
                for (auto y : B) {
                    if (used[static_cast<std::size_t>(y)] || ! contains(nu, y) || ! contains(nzw, y))
                        continue;
                    std::vector<Vertex> roles(u);
                    roles.push_back(y);
                    roles.push_back(wv);
                    roles.insert(roles.end(), z.begin(), z.end());
                    made.emplace(k, std::move(roles));
                    ++case1;
                    return false;
                }
                return true;
            }
            VertexSet apool;
            for (auto v : nzw)
                if (contains(pool, v) && ! contains(z, v))
                    apool.push_back(v);
            for_each_combination(apool, k - 1, [&](std::span<const int> a) {
                VertexSet as(a.begin(), a.end());
                if (! good.count(as))
                    return true;
                for (auto c : h.neighborhood(as)) {
                    if (! contains(B, c) || used[static_cast<std::size_t>(c)])
                        continue;
                    std::vector<Vertex> roles(z.begin(), z.end());
                    roles.insert(std::upper_bound(roles.begin(), roles.end(), wv), wv);
                    roles.push_back(a[0]);
                    roles.push_back(a[1]);
                    roles.insert(roles.end(), a.begin() + 2, a.end());
                    roles.push_back(c);
                    made.emplace(k, std::move(roles));
                    ++case2;
                    return false;
                }
                return true;
            });
            return ! made;
        });
        if (! made) {
            note(tx, "error", "no copy for matching edge " + show(candidates[i]));
            return fail(std::move(tx));
        }
        for (auto v : made->vertices())
            used[static_cast<std::size_t>(v)] = 1;
        x_copies.push_back(*made);
    }
    VertexSet A1, B1;
    for (auto v : A)
        if (! used[static_cast<std::size_t>(v)])
            A1.push_back(v);
    for (auto v : B)
        if (! used[static_cast<std::size_t>(v)])
            B1.push_back(v);
    note(tx, "case1", std::to_string(case1));
    note(tx, "case2", std::to_string(case2));
    note(tx, "A'", std::to_string(A1.size()));
    note(tx, "B'", std::to_string(B1.size()));
    if (2 * A1.size() != static_cast<std::size_t>(2 * k - 3) * B1.size()) {
        note(tx, "error", "residual sizes are not in ratio (2k-3):2");
        return fail(std::move(tx));
    }
    pass(std::move(tx));

    // build-J
    StageReport bj{"build-J"};
    VertexSet rest = set_union(A1, B1);
    auto sub = induced(h, rest);
    VertexSet a_local, b_local;
    for (std::size_t i = 0; i < rest.size(); ++i)
        (contains(A1, rest[i]) ? a_local : b_local).push_back(static_cast<Vertex>(i));
    std::optional<AuxiliaryJ> J;
    try {
        J = build_auxiliary_J(sub.graph, a_local, b_local);
    }
    catch (const BudgetExceeded & e) {
        note(bj, "error", e.what());
        return fail(std::move(bj), Verdict::unknown);
    }
    note(bj, "edges", std::to_string(J->graph.edge_count()));
    pass(std::move(bj));

    // DH-check
    StageReport dh{"DH-check"};
    const long n1 = static_cast<long>(rest.size());
    if (n1 > 0) {
        Rational full(binomial(static_cast<long>(a_local.size()), 2L * k - 3) * binomial(static_cast<long>(b_local.size()), 2));
        Rational ej(static_cast<long>(J->graph.edge_count()));
        bool p1 = compare_one_minus(ej, beta, full) >= 0;
        Rational p2_threshold = pow(Rational(n1) / s, static_cast<unsigned>(2 * k - 2))
            / pow(Rational(s), static_cast<unsigned>((k + 1) * (k + 1)));
        std::size_t min_deg = SIZE_MAX;
        for (Vertex v = 0; v < J->graph.n(); ++v)
            min_deg = std::min(min_deg, J->graph.degree(v));
        bool p2 = Rational(static_cast<long>(min_deg)) >= p2_threshold;
        note(dh, "e(J)", std::to_string(J->graph.edge_count()));
        note(dh, "P1_threshold", "(1 - " + beta.to_string() + ") * " + to_pq_string(full));
        note(dh, "P1", p1 ? "true" : "false");
        note(dh, "min_degree", std::to_string(min_deg));
        note(dh, "P2_threshold", to_pq_string(p2_threshold));
        note(dh, "P2", p2 ? "true" : "false");
        if (! p1 || ! p2)
            return fail(std::move(dh));
    }
    pass(std::move(dh));

    // J-matching
    StageReport jm{"J-matching"};
    auto matching = perfect_matching(J->graph, options.budget);
    if (matching.verdict != Verdict::yes) {
        note(jm, "error", matching.verdict == Verdict::unknown ? "budget exhausted" : "J has no perfect matching");
        return fail(std::move(jm), matching.verdict);
    }
    note(jm, "edges", std::to_string(matching.edges.size()));
    pass(std::move(jm));

    Tiling tiling{x_copies};
    for (auto & e : matching.edges) {
        auto it = std::lower_bound(J->graph.edges().begin(), J->graph.edges().end(), e);
        auto & local = J->copies[static_cast<std::size_t>(it - J->graph.edges().begin())];
        std::vector<Vertex> roles;
        for (auto v : local.roles())
            roles.push_back(sub.relabel[static_cast<std::size_t>(v)]);
        tiling.copies.emplace_back(k, std::move(roles));
    }
    std::sort(tiling.copies.begin(), tiling.copies.end());
    if (auto check = validate_tiling(h, tiling, true); ! check)
        throw std::logic_error("pipeline assembled an invalid tiling: " + check.reason);
    result.tiling = std::move(tiling);
    result.verdict = Verdict::yes;
    return result;
}

}
