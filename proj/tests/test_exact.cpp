#include "search_oracles.hpp"

#include "tktile/constructions.hpp"
#include "tktile/exact.hpp"
#include "tktile/validate.hpp"

#include <doctest.h>

#include <map>

using namespace tktile;

namespace {
    auto classes_of(int k, int m) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j)
                c[static_cast<std::size_t>(i)].push_back(i * m + j);
        return c;
    }

    auto stage_names(const PipelineResult & r) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (auto & s : r.stages)
            out.push_back(s.stage);
        return out;
    }

    auto diagnostic(const StageReport & r, const std::string & key) -> std::string
    {
        for (auto & [k, v] : r.diagnostics)
            if (k == key)
                return v;
        return {};
    }
}

TEST_CASE("perfect tiling agrees with partition search")
{
    int yes = 0, no = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int k = seed % 3 == 0 ? 4 : 3;
        int n = k == 4 ? 7 : (seed % 2 ? 10 : 5);
        auto h = random_kgraph(n, k, Rational(seed % 5 + 3) / 10, seed);
        auto d = perfect_tiling(h);
        bool expect = oracle::tileable(h);
        REQUIRE(d.verdict == (expect ? Verdict::yes : Verdict::no));
        if (expect) {
            ++yes;
            CHECK(validate_tiling(h, *d.tiling, true).ok);
        }
        else
            ++no;

        ExactOptions lazy;
        lazy.cap = 1;
        auto l = perfect_tiling(h, lazy);
        CHECK(l.lazy == (enumerate_tk_copies(h).size() > 1));
        CHECK(l.verdict == d.verdict);
        if (l.tiling)
            CHECK(validate_tiling(h, *l.tiling, true).ok);
    }
    CHECK(yes > 5);
    CHECK(no > 5);
}

TEST_CASE("perfect tiling: divisibility, extremal graph, budget")
{
    auto d = perfect_tiling(KGraph::complete(11, 3));
    CHECK(d.verdict == Verdict::no);
    CHECK(d.reason == "divisibility");

    CHECK(perfect_tiling(KGraph::complete(0, 3)).verdict == Verdict::yes);
    CHECK(perfect_tiling(extremal_construction(3, 15).graph).verdict == Verdict::no);
    CHECK(perfect_tiling(KGraph::complete(15, 3)).verdict == Verdict::yes);

    ExactOptions tiny;
    tiny.budget = 1;
    tiny.cap = 1;
    auto cut = perfect_tiling(extremal_construction(3, 15).graph, tiny);
    CHECK(cut.lazy);
    CHECK(cut.verdict == Verdict::unknown);
}

TEST_CASE("max tiling matches the packing oracle")
{
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        int k = seed % 4 == 0 ? 4 : 3;
        int n = k == 4 ? 10 : 11;
        auto h = random_kgraph(n, k, Rational(seed % 4 + 2) / 10, seed);
        auto r = max_tiling(h);
        REQUIRE(r.verdict == Verdict::yes);
        CHECK(r.lo == r.hi);
        CHECK(r.lo == oracle::max_packing(h));
        CHECK(r.tiling.copies.size() == r.lo);
        CHECK(validate_tiling(h, r.tiling, false).ok);
        CHECK(Rational(static_cast<long>(r.lo)) <= r.lp_bound);
    }
}

TEST_CASE("max tiling on the extremal graph leaves one copy short")
{
    auto ext = extremal_construction(3, 15);
    auto r = max_tiling(ext.graph);
    REQUIRE(r.verdict == Verdict::yes);
    CHECK(r.lo == 2);
    CHECK(r.hi == 2);
}

TEST_CASE("k-partite matching agrees with brute force, k = 2 exhaustively")
{
    const int m = 3;
    auto classes = classes_of(2, m);
    int dh_true = 0;
    for (unsigned mask = 0; mask < 1u << (m * m); ++mask) {
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (mask >> (i * m + j) & 1u)
                    edges.push_back({i, m + j});
        KGraph j(2 * m, 2, edges);
        auto r = kpartite_perfect_matching(j, classes);
        bool expect = oracle::matchable(j);
        REQUIRE(r.verdict == (expect ? Verdict::yes : Verdict::no));
        if (expect)
            CHECK(validate_perfect_matching(j, classes, r.edges).ok);

        auto dh = dh_condition(j, classes);
        CHECK(dh.threshold == Rational(3, 2));
        if (dh.holds) {
            ++dh_true;
            CHECK(expect);
        }
    }
    CHECK(dh_true > 0);
}

TEST_CASE("k-partite matching, k = 3, random")
{
    auto classes = classes_of(3, 3);
    VertexSet pool = iota_vertices(9);
    std::vector<Edge> all;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b)
            for (int c = 6; c < 9; ++c)
                all.push_back({a, b, c});
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Edge> edges;
        for (auto & e : all)
            if (rng.below(3) == 0)
                edges.push_back(e);
        KGraph j(9, 3, edges);
        auto r = kpartite_perfect_matching(j, classes);
        REQUIRE(r.verdict == (oracle::matchable(j) ? Verdict::yes : Verdict::no));
        auto dh = dh_condition(j, classes);
        CHECK(dh.threshold == 6);
        if (dh.holds)
            CHECK(r.verdict == Verdict::yes);
    }
}

TEST_CASE("k-partite structure is enforced")
{
    KGraph j(4, 2, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(kpartite_perfect_matching(j, {{0, 1}, {2, 3}}), Error);
    CHECK_THROWS_AS(kpartite_perfect_matching(j, {{0, 2}, {1}}), Error);
    CHECK_THROWS_AS(kpartite_perfect_matching(j, {{0, 2}, {1, 2}}), Error);
    CHECK(kpartite_perfect_matching(j, {{0, 2}, {1, 3}}).verdict == Verdict::yes);
}

TEST_CASE("corollary thresholds")
{
    auto t = corollary_thresholds(3, 5, Rational(1, 10));
    CHECK(t.c1 == Rational(36855, 2));
    CHECK(t.c2 == Rational(1, 244140625));

    // Recomputed from the defining products.
    for (int k = 3; k <= 5; ++k)
        for (int n = 1; n <= 6; ++n) {
            Rational beta(1, 7);
            auto r = corollary_thresholds(k, n, beta);
            CHECK(r.c1 == (1 - beta) * Rational(oracle::binom((2 * k - 3) * n, 2 * k - 3) * oracle::binom(2 * n, 2)));
            Rational c2 = 1;
            for (int i = 0; i < 2 * k - 2; ++i)
                c2 *= n;
            for (int i = 0; i < (k + 1) * (k + 1); ++i)
                c2 /= 2 * k - 1;
            CHECK(r.c2 == c2);
        }
}

TEST_CASE("good and bad sets")
{
    auto ext = extremal_construction(3, 15);
    VertexSet s(ext.b.begin(), ext.b.begin() + 9);
    auto gb = classify_good_bad(ext.graph, s, 0);
    CHECK(gb.good.size() == 36);
    CHECK(gb.bad.empty());
    CHECK(gb.within_bound);

    // Brute force on a random graph against sqrt(gamma) n: count^2 > gamma n^2.
    auto h = random_kgraph(9, 3, Rational(1, 2), 3);
    VertexSet s2{0, 1, 2, 3, 4, 5};
    Rational gamma(1, 9);
    auto r = classify_good_bad(h, s2, gamma);
    auto edges = oracle::edge_set(h);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < s2.size(); ++i)
        for (std::size_t j = i + 1; j < s2.size(); ++j) {
            long c = 0;
            for (auto v : s2)
                if (v != s2[i] && v != s2[j]) {
                    Edge e{s2[i], s2[j], v};
                    std::sort(e.begin(), e.end());
                    c += static_cast<long>(edges.count(e));
                }
            bad += Rational(c * c) > gamma * 81;
        }
    CHECK(r.bad.size() == bad);
    CHECK(r.good.size() + r.bad.size() == 15);
    CHECK(r.within_bound == (Rational(static_cast<long>(bad * bad)) <= gamma * 81 * 81));
}

TEST_CASE("auxiliary J")
{
    auto j = build_auxiliary_J(KGraph::complete(15, 3), iota_vertices(9), VertexSet{9, 10, 11, 12, 13, 14});
    CHECK(j.graph.k() == 5);
    CHECK(j.graph.edge_count() == 1260);
    CHECK(j.copies.size() == 1260);

    auto h = random_kgraph(8, 3, Rational(1, 2), 11);
    VertexSet a{0, 1, 2, 3, 4}, b{5, 6, 7};
    auto aux = build_auxiliary_J(h, a, b);
    auto edges = oracle::edge_set(h);
    std::size_t expect = 0;
    oracle::subsets(8, 5, [&](const VertexSet & s) {
        long in_a = std::count_if(s.begin(), s.end(), [](int v) { return v < 5; });
        expect += in_a == 3 && oracle::supports(edges, 3, s);
        return true;
    });
    CHECK(aux.graph.edge_count() == expect);
    for (std::size_t i = 0; i < aux.copies.size(); ++i) {
        CHECK(aux.copies[i].vertices() == aux.graph.edges()[i]);
        CHECK(validate_copy(h, aux.copies[i]).ok);
    }
    CHECK_THROWS_AS(build_auxiliary_J(h, a, b, 0), BudgetExceeded);
    CHECK_THROWS_AS(build_auxiliary_J(h, VertexSet{0, 1}, b), Error);
}

TEST_CASE("pipeline stops at matching-M on the extremal graph")
{
    auto ext = extremal_construction(3, 15);
    auto r = extremal_pipeline(ext.graph, 0);
    CHECK(r.verdict == Verdict::no);
    CHECK(! r.tiling);
    REQUIRE(r.failure());
    CHECK(r.failure()->stage == "matching-M");
    CHECK(stage_names(r) == std::vector<std::string>{"witness", "good-bad", "X", "matching-M"});
    CHECK(diagnostic(r.stages[0], "S") == "[5,6,7,8,9,10,11,12,13]");
    CHECK(diagnostic(r.stages[2], "X") == "[14]");

    PipelineOptions fb;
    fb.fallback = true;
    auto f = extremal_pipeline(ext.graph, 0, fb);
    CHECK(f.verdict == Verdict::no);
    CHECK(! f.used_fallback);
}

TEST_CASE("pipeline tiles the complete graph")
{
    auto h = KGraph::complete(15, 3);
    auto r = extremal_pipeline(h, 1);
    REQUIRE(r.verdict == Verdict::yes);
    CHECK(r.failure() == nullptr);
    CHECK(r.stages.size() == 8);
    CHECK(diagnostic(r.stages[2], "X") == "[]");
    CHECK(diagnostic(r.stages[5], "edges") == "1260");
    CHECK(validate_tiling(h, *r.tiling, true).ok);
}

TEST_CASE("pipeline absorbs an exceptional vertex")
{
    // Edges meet D = {0..5}, except that vertex 5 sees S = {6..14} in one edge only.
    std::vector<Edge> edges;
    oracle::subsets(15, 3, [&](const VertexSet & e) {
        if (e[0] > 5)
            return true;
        if (e[0] == 5 && ! (e[1] == 6 && e[2] == 7))
            return true;
        edges.push_back(e);
        return true;
    });
    KGraph h(15, 3, edges);
    PipelineOptions opt;
    opt.witness = VertexSet{6, 7, 8, 9, 10, 11, 12, 13, 14};
    auto r = extremal_pipeline(h, 0, opt);
    REQUIRE(r.verdict == Verdict::yes);
    CHECK(diagnostic(r.stages[2], "X") == "[5]");
    CHECK(diagnostic(r.stages[4], "case1") == "1");
    CHECK(diagnostic(r.stages[5], "edges") == "120");
    CHECK(validate_tiling(h, *r.tiling, true).ok);
    CHECK(r.tiling->copies.size() == 3);
}

TEST_CASE("pipeline fallback and bad witnesses")
{
    auto h = KGraph::complete(15, 3);
    PipelineOptions opt;
    opt.witness = VertexSet{0, 1, 2, 3, 4, 5};
    auto r = extremal_pipeline(h, 1, opt);
    CHECK(r.verdict == Verdict::no);
    REQUIRE(r.failure());
    CHECK(r.failure()->stage == "Tk-for-X");

    opt.fallback = true;
    auto f = extremal_pipeline(h, 1, opt);
    CHECK(f.verdict == Verdict::yes);
    CHECK(f.used_fallback);
    CHECK(validate_tiling(h, *f.tiling, true).ok);

    auto dense = extremal_pipeline(h, Rational(1, 2));
    REQUIRE(dense.failure());
    CHECK(dense.failure()->stage == "witness");

    CHECK_THROWS_AS(extremal_pipeline(KGraph::complete(14, 3), 1), Error);
}
