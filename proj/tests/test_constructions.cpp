#include "oracles.hpp"

#include "tktile/constructions.hpp"

#include <doctest.h>

using namespace tktile;

TEST_CASE("extremal construction examples")
{
    auto e = extremal_construction(3, 15);
    CHECK(e.a.size() == 5);
    CHECK(e.b.size() == 10);
    CHECK(e.graph.edge_count() == 335);
    CHECK(min_codegree(e.graph).value == 5);
    auto f = extremal_construction(4, 14);
    CHECK(f.a.size() == 3);
    CHECK(f.b.size() == 11);
    try {
        (void)extremal_construction(3, 16);
        FAIL("expected error");
    }
    catch (const Error & err) {
        CHECK(err.kind() == ErrorKind::divisibility);
    }
}

TEST_CASE("extremal instance validator")
{
    for (auto [k, n] : {std::pair{3, 10}, {3, 15}, {4, 14}, {5, 18}}) {
        auto e = extremal_construction(k, n);
        auto edges = oracle::edge_set(e.graph);
        std::size_t checked = 0;
        oracle::subsets(n, k, [&](const VertexSet & s) {
            bool meets = s.front() < static_cast<int>(e.a.size());
            CHECK(edges.count(s) == static_cast<std::size_t>(meets));
            ++checked;
            return true;
        });
        CHECK(checked == static_cast<std::size_t>(oracle::binom(n, k)));
    }
}

TEST_CASE("augmented blowup bounds")
{
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        int n = 5 + static_cast<int>(seed % 4);
        auto h = random_kgraph(n, 3, Rational(1, 2), seed);
        auto b = random_kgraph(n, 2, Rational(1, 3), seed + 1000);
        auto aug = augmented_blowup(h, b);
        CHECK(aug.graph.n() == 5 * n);
        CHECK(min_codegree(aug.graph).value >= 5 * min_codegree(h).value);
        CHECK(max_degree(aug.pairs) == 5 * max_degree(b) + 4);

        // Contracting clone classes recovers a supergraph of H.
        for (auto & e : h.edges()) {
            Edge img;
            for (auto v : e)
                img.push_back(AugmentedBlowup::clone(v, 0, 3));
            CHECK(aug.graph.has_edge(img));
        }
    }
}

TEST_CASE("augmented blowup of an edgeless graph keeps only clone-pair edges")
{
    auto aug = augmented_blowup(KGraph::edgeless(3, 3), empty_pair_graph(3));
    for (auto & e : aug.graph.edges()) {
        int a = e[0] / 5, b = e[1] / 5, c = e[2] / 5;
        CHECK((a == b || b == c));
    }
    // 3-sets of 15 clones minus transversal ones: C(15,3) - 5^3.
    CHECK(aug.graph.edge_count() == 455 - 125);
    CHECK(aug.pairs.edge_count() == 3 * 10);
    CHECK_THROWS_AS(augmented_blowup(KGraph::edgeless(13, 3), empty_pair_graph(13)), Error);
}

TEST_CASE("random with codegree")
{
    CHECK(random_with_codegree(8, 3, 0, 1).edge_count() == 0);
    CHECK(random_with_codegree(8, 3, 6, 1) == KGraph::complete(8, 3));
    auto a = random_with_codegree(10, 3, 4, 42);
    auto b = random_with_codegree(10, 3, 4, 42);
    CHECK(a == b);
    CHECK(min_codegree(a).value >= 4);
    try {
        (void)random_with_codegree(10, 3, 8, 3, 0);
        FAIL("expected error");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::generation_failed);
    }
}

TEST_CASE("random kgraph determinism")
{
    CHECK(random_kgraph(9, 3, Rational(1, 2), 7) == random_kgraph(9, 3, Rational(1, 2), 7));
    CHECK(random_kgraph(9, 3, Rational(1), 7) == KGraph::complete(9, 3));
    CHECK(random_kgraph(9, 3, Rational(0), 7).edge_count() == 0);
    // An unreduced probability samples exactly like its reduced form.
    CHECK(random_kgraph(9, 3, Rational(2, 4), 7) == random_kgraph(9, 3, Rational(1, 2), 7));
}

TEST_CASE("domination")
{
    CHECK(dominates(std::vector{2, 5}, std::vector{1, 3}));
    CHECK(dominates(std::vector{2, 5}, std::vector{2, 5}));
    CHECK(! dominates(std::vector{1, 4}, std::vector{2, 3}));
    CHECK_THROWS_AS(dominates(std::vector{1}, std::vector{1, 2}), Error);

    SplitMix64 rng(5);
    auto tuple = [&] {
        std::vector<int> t;
        for (int v = 0; v < 8; ++v)
            if (t.size() < 3 && rng.below(2))
                t.push_back(v);
        while (t.size() < 3)
            t.push_back(8 + static_cast<int>(t.size()));
        return t;
    };
    for (int i = 0; i < 300; ++i) {
        auto u = tuple(), v = tuple(), w = tuple();
        CHECK(dominates(u, u));
        if (dominates(u, v) && dominates(v, u))
            CHECK(u == v);
        if (dominates(u, v) && dominates(v, w))
            CHECK(dominates(u, w));
    }
}
