#include "oracles.hpp"

#include "tktile/constructions.hpp"
#include "tktile/patterns.hpp"
#include "tktile/validate.hpp"

#include <doctest.h>

#include <numeric>

using namespace tktile;

TEST_CASE("tk_pattern shapes")
{
    auto t3 = tk_pattern(3);
    CHECK(t3.n() == 5);
    CHECK(t3.edges() == std::vector<Edge>{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
    auto t2 = tk_pattern(2);
    CHECK(t2.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(tk_pattern(1), Error);
}

TEST_CASE("automorphism counts")
{
    CHECK(automorphism_count(tk_pattern(2)) == 6);
    CHECK(automorphism_count(tk_pattern(3)) == 4);
    // (k-1)! * 2 * (k-2)!
    CHECK(automorphism_count(tk_pattern(4)) == 24);
}

TEST_CASE("supports_tk examples")
{
    auto ext = extremal_construction(3, 15);
    auto copy = supports_tk(ext.graph, std::vector{0, 1, 5, 6, 7});
    REQUIRE(copy);
    CHECK(validate_copy(ext.graph, *copy));
    CHECK(! supports_tk(ext.graph, std::vector{5, 6, 7, 8, 9}));
    CHECK(! supports_tk(ext.graph, std::vector{0, 5, 6, 7, 8}));
    auto k5 = KGraph::complete(5, 3);
    auto c = supports_tk(k5, iota_vertices(5));
    REQUIRE(c);
    // Lexicographically least roles.
    CHECK(c->roles() == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(supports_tk(k5, std::vector{0, 1, 2}), Error);
}

TEST_CASE("enumeration examples")
{
    CHECK(enumerate_tk_copies(KGraph::complete(5, 3)).size() == 30);
    CHECK(enumerate_tk_copies(KGraph::edgeless(9, 3)).empty());
    auto ext = extremal_construction(3, 10);
    auto copies = enumerate_tk_copies(ext.graph);
    CHECK(! copies.empty());
    for (auto & c : copies) {
        CHECK(set_intersection_size(c.vertices(), ext.a) >= 2);
        CHECK(validate_copy(ext.graph, c));
    }
    EnumerateOptions small;
    small.cap = 10;
    CHECK_THROWS_AS(enumerate_tk_copies(KGraph::complete(5, 3), small), BudgetExceeded);
}

TEST_CASE("complete hosts: copies per set = (2k-1)!/|Aut|")
{
    CHECK(enumerate_tk_copies(KGraph::complete(5, 3)).size() == 120 / automorphism_count(tk_pattern(3)));
    CHECK(enumerate_tk_copies(KGraph::complete(7, 4)).size() == 5040 / automorphism_count(tk_pattern(4)));
    CHECK(enumerate_tk_copies(KGraph::complete(6, 3)).size() == 6 * 30);
}

TEST_CASE("enumeration matches brute force, relabelling and workers")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int k = seed % 4 == 0 ? 4 : 3;
        int n = k == 4 ? 8 : 7 + static_cast<int>(seed % 3);
        auto h = random_kgraph(n, k, Rational(1, 2), seed);
        auto copies = enumerate_tk_copies(h);
        auto triples = oracle::tk_edge_triples(h);
        CHECK(copies.size() == triples.size());
        std::set<std::vector<Edge>> mine;
        for (auto & c : copies) {
            CHECK(validate_copy(h, c));
            auto e = c.edges();
            std::vector<Edge> t(e.begin(), e.end());
            std::sort(t.begin(), t.end());
            mine.insert(t);
        }
        CHECK(mine == triples);

        EnumerateOptions par;
        par.workers = 4;
        CHECK(enumerate_tk_copies(h, par) == copies);

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        SplitMix64 rng(seed);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
        CHECK(enumerate_tk_copies(oracle::relabel(h, perm)).size() == copies.size());

        auto edges = oracle::edge_set(h);
        oracle::subsets(n, 2 * k - 1, [&](const VertexSet & s) {
            EnumerateOptions r;
            r.restrict_to = s;
            bool nonempty = ! enumerate_tk_copies(h, r).empty();
            auto sup = supports_tk(h, s);
            CHECK(nonempty == sup.has_value());
            CHECK(nonempty == oracle::supports(edges, k, s));
            return true;
        });
    }
}

TEST_CASE("supporting sets")
{
    auto copies = enumerate_tk_copies(KGraph::complete(6, 3));
    CHECK(supporting_sets(copies).size() == 6);
}

TEST_CASE("tight 2-paths")
{
    CHECK(tight_2paths(KGraph::complete(4, 3)).total == 6);
    CHECK(tight_2paths(KGraph(5, 3, {{0, 1, 2}})).total == 0);
    auto k6 = KGraph::complete(6, 3);
    std::vector<int> mono(k6.edge_count(), 0);
    CHECK(tight_2paths(k6, &mono).rainbow == 0);
    std::vector<int> bad(3, 0);
    CHECK_THROWS_AS(tight_2paths(k6, &bad), Error);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto h = random_kgraph(8, 3, Rational(1, 3), seed);
        SplitMix64 rng(seed + 99);
        std::vector<int> colors;
        for (std::size_t i = 0; i < h.edge_count(); ++i)
            colors.push_back(static_cast<int>(rng.below(3)));
        auto mine = tight_2paths(h, &colors);
        auto ref = oracle::tight_2paths(h, &colors);
        CHECK(mine.total == ref.first);
        CHECK(mine.rainbow == ref.second);
        std::uint64_t visited = 0;
        for_each_tight_2path(h, [&](std::size_t, std::size_t) { ++visited; });
        CHECK(visited == ref.first);
    }
}

TEST_CASE("blowups")
{
    auto t3 = tk_pattern(3);
    CHECK(blowup(t3, 1) == t3);
    auto b = blowup(KGraph(3, 3, {{0, 1, 2}}), 2);
    CHECK(b.n() == 6);
    CHECK(b.edge_count() == 8);
    CHECK(blowup(t3, 2).n() == 10);

    auto found = find_blowup(KGraph::complete(10, 3), t3, 2);
    REQUIRE(found);
    CHECK(found->size() == 5);
    auto target = blowup(t3, 2);
    for (auto & e : target.edges()) {
        Edge img;
        for (auto v : e)
            img.push_back((*found)[static_cast<std::size_t>(v / 2)][static_cast<std::size_t>(v % 2)]);
        std::sort(img.begin(), img.end());
        CHECK(KGraph::complete(10, 3).has_edge(img));
    }
    CHECK(! find_blowup(KGraph::complete(9, 3), t3, 2));
    auto ext = extremal_construction(3, 15);
    // Clones of pattern vertices 0 and 2 fit in A (4 of its 5 vertices) and meet every edge.
    auto in_ext = find_blowup(ext.graph, t3, 2);
    CHECK(in_ext.has_value());
}
