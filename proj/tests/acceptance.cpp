// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (rationals, integers, verdicts); there are no floating tolerances.

#include "search_oracles.hpp"

#include "tktile/cli.hpp"
#include "tktile/constructions.hpp"
#include "tktile/exact.hpp"
#include "tktile/fractional.hpp"
#include "tktile/io.hpp"
#include "tktile/lattice.hpp"
#include "tktile/rainbow.hpp"
#include "tktile/report.hpp"
#include "tktile/validate.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <unistd.h>

using namespace tktile;
namespace fs = std::filesystem;

namespace {
    struct Outcome {
        bool pass = true;
        std::string detail;
        std::string failure;

        void require(bool ok, const std::string & what)
        {
            if (! ok && pass) {
                pass = false;
                failure = what;
            }
        }
    };

    /// Every witness check made anywhere in the run, for criterion 9.
    struct WitnessTally {
        std::size_t checked = 0;
        std::size_t failed = 0;
        std::map<std::string, std::size_t> kinds;
        std::string first_failure;

        auto record(const std::string & kind, const Check & c) -> bool
        {
            ++checked;
            ++kinds[kind];
            if (! c.ok) {
                ++failed;
                if (first_failure.empty())
                    first_failure = kind + ": " + c.reason;
            }
            return c.ok;
        }
    };

    WitnessTally tally;

    auto probability(long num, long den) -> Rational { return Rational(num) / den; }

    /// Corpus shared by criteria 2 and 3: n in 5..12, p in {1/5, ..., 4/5}.
    auto duality_instance(std::uint64_t i) -> KGraph
    {
        int n = 5 + static_cast<int>(i % 8);
        return random_kgraph(n, 3, probability(static_cast<long>(1 + i % 4), 5), 1000 + i);
    }

    auto bipartite(int m, const std::vector<std::pair<int, int>> & pairs) -> KGraph
    {
        std::vector<Edge> edges;
        for (auto [a, b] : pairs)
            edges.push_back({a, m + b});
        return KGraph(2 * m, 2, edges);
    }

    auto classes_of(int m) -> std::vector<VertexSet>
    {
        VertexSet a, b;
        for (int i = 0; i < m; ++i) {
            a.push_back(i);
            b.push_back(m + i);
        }
        return {a, b};
    }

    // 1. Extremal construction exactness.
    auto criterion_extremal() -> Outcome
    {
        Outcome o;
        std::ostringstream detail;
        for (auto [k, n] : {std::pair{3, 10}, {3, 15}, {4, 14}}) {
            auto ext = extremal_construction(k, n);
            const std::string tag = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
            const std::size_t expected_delta = static_cast<std::size_t>(2 * n / (2 * k - 1) - 1);
            auto delta = min_codegree(ext.graph);
            o.require(delta.value == expected_delta, tag + " min codegree " + std::to_string(delta.value));
            o.require(oracle::min_codegree(ext.graph).first == expected_delta, tag + " oracle min codegree");

            auto copies = enumerate_tk_copies(ext.graph);
            std::size_t min_in_a = SIZE_MAX;
            for (auto & c : copies) {
                std::size_t in_a = 0;
                for (auto v : c.vertices())
                    in_a += std::binary_search(ext.a.begin(), ext.a.end(), v);
                min_in_a = std::min(min_in_a, in_a);
                tally.record("copy", validate_copy(ext.graph, c));
            }
            o.require(! copies.empty() && min_in_a >= 2, tag + " copy with fewer than 2 A-vertices");

            auto best = max_tiling(ext.graph);
            o.require(best.verdict == Verdict::yes && best.lo == ext.a.size() / 2, tag + " max_tiling");
            tally.record("tiling", validate_tiling(ext.graph, best.tiling, false));
            auto perfect = perfect_tiling(ext.graph);
            o.require(perfect.verdict == Verdict::no, tag + " perfect_tiling not decided-no");
            detail << tag << " delta=" << delta.value << " copies=" << copies.size() << " max=" << best.lo << "; ";
        }
        o.detail = detail.str();
        o.detail.resize(o.detail.size() - 2);
        return o;
    }

    // 2. Fractional/Farkas duality.
    auto criterion_duality() -> Outcome
    {
        Outcome o;
        int tilings = 0, certificates = 0;
        for (std::uint64_t i = 0; i < 500; ++i) {
            auto h = duality_instance(i);
            auto r = perfect_fractional_tiling(h);
            o.require(r.tiling.has_value() != r.certificate.has_value(), "instance " + std::to_string(i) + " returned both or neither");
            if (r.tiling) {
                ++tilings;
                o.require(tally.record("fractional tiling", validate_fractional_tiling(h, *r.tiling, true)),
                    "fractional tiling invalid at " + std::to_string(i));
            }
            if (r.certificate) {
                ++certificates;
                bool ok = verify_certificate(h, *r.certificate).valid && oracle::certificate_valid(h, r.certificate->a);
                o.require(tally.record("certificate", ok ? Check::pass() : Check::fail("certificate rejected")),
                    "certificate invalid at " + std::to_string(i));
            }
        }
        auto ext = extremal_construction(3, 15);
        FarkasCertificate scaled;
        for (int v = 0; v < 15; ++v)
            scaled.a.push_back(v < static_cast<int>(ext.a.size()) ? Rational(2 * 3 - 3) : Rational(-2));
        auto chk = verify_certificate(ext.graph, scaled);
        o.require(chk.valid && chk.total == -5, "H_ext(3,15) certificate");
        o.require(oracle::certificate_valid(ext.graph, scaled.a), "H_ext(3,15) certificate (oracle)");
        o.require(tilings > 50 && certificates > 50, "corpus lacks one of the two outcomes");
        o.detail = "500 graphs: " + std::to_string(tilings) + " tilings, " + std::to_string(certificates)
            + " certificates; H_ext(3,15) a.1 = " + to_pq_string(chk.total);
        return o;
    }

    // 3. Integral/fractional consistency.
    auto criterion_consistency() -> Outcome
    {
        Outcome o;
        int perfect = 0, checked = 0;
        for (std::uint64_t i = 0; i < 500; ++i) {
            auto h = duality_instance(i);
            auto t = perfect_tiling(h);
            o.require(t.verdict != Verdict::unknown, "perfect_tiling undecided");
            if (t.verdict == Verdict::yes) {
                ++perfect;
                o.require(perfect_fractional_tiling(h).tiling.has_value(), "tileable but LP infeasible at " + std::to_string(i));
                tally.record("tiling", validate_tiling(h, *t.tiling, true));
            }
            auto m = max_tiling(h);
            auto lp = fractional_packing_number(h);
            o.require(m.verdict == Verdict::yes, "max_tiling undecided");
            o.require(Rational(static_cast<long>(m.lo)) <= lp.value, "max_tiling above packing LP at " + std::to_string(i));
            tally.record("tiling", validate_tiling(h, m.tiling, false));
            tally.record("fractional packing", validate_fractional_tiling(h, lp.tiling, false));
            ++checked;
        }
        o.detail = std::to_string(checked) + " graphs, " + std::to_string(perfect) + " perfectly tilable";
        return o;
    }

    // 4. Exact cover against the naive partition search.
    auto criterion_exact_cover() -> Outcome
    {
        Outcome o;
        int yes = 0, no = 0;
        for (std::uint64_t i = 0; i < 500; ++i) {
            int n = i % 5 == 0 ? 6 + static_cast<int>(i / 5 % 4) : (i % 2 ? 5 : 10);
            auto h = random_kgraph(n, 3, probability(static_cast<long>(1 + i % 4), 5), 5000 + i);
            auto d = perfect_tiling(h);
            bool expect = oracle::tileable(h);
            o.require(d.verdict == (expect ? Verdict::yes : Verdict::no), "disagreement on instance " + std::to_string(i));
            if (d.tiling)
                tally.record("tiling", validate_tiling(h, *d.tiling, true));
            (expect ? yes : no)++;
        }
        o.require(yes > 50 && no > 50, "corpus lacks one of the two outcomes");
        o.detail = "500 graphs (n <= 10): " + std::to_string(yes) + " yes, " + std::to_string(no) + " no";
        return o;
    }

    // 5. Daykin-Haggkvist at k = 2 and the corollary thresholds.
    auto criterion_dh() -> Outcome
    {
        Outcome o;
        std::size_t exhaustive = 0, sampled = 0;
        auto check_graph = [&](int m, const KGraph & j, bool must_hold) {
            auto classes = classes_of(m);
            auto dh = dh_condition(j, classes);
            // Independent reading of the condition: 2 deg(v) >= m for every vertex.
            bool holds = true;
            for (int v = 0; v < 2 * m; ++v)
                holds = holds && 2 * static_cast<int>(j.degree(v)) >= m;
            o.require(dh.holds == holds, "condition disagrees with the degree count");
            if (must_hold)
                o.require(holds, "sampled graph misses the condition");
            if (! holds)
                return false;
            auto mt = kpartite_perfect_matching(j, classes);
            o.require(mt.verdict == Verdict::yes, "condition holds but no perfect matching (m=" + std::to_string(m) + ")");
            o.require(oracle::matchable(j), "oracle finds no perfect matching");
            if (mt.verdict == Verdict::yes)
                tally.record("matching", validate_perfect_matching(j, classes, mt.edges));
            return true;
        };

        for (int m = 1; m <= 4; ++m) {
            const int cells = m * m;
            for (unsigned mask = 0; mask < (1u << cells); ++mask) {
                std::vector<std::pair<int, int>> pairs;
                for (int c = 0; c < cells; ++c)
                    if (mask >> c & 1u)
                        pairs.emplace_back(c / m, c % m);
                exhaustive += check_graph(m, bipartite(m, pairs), false);
            }
        }

        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            int m = 5 + static_cast<int>(seed % 3);
            SplitMix64 rng(seed + 77);
            std::vector<std::vector<char>> adj(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
            const int need = (m + 1) / 2;
            // Left vertices pick `need` random partners; deficient right vertices then get extra ones.
            for (int a = 0; a < m; ++a)
                for (int picked = 0; picked < need;) {
                    auto b = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)));
                    if (! adj[static_cast<std::size_t>(a)][b]) {
                        adj[static_cast<std::size_t>(a)][b] = 1;
                        ++picked;
                    }
                }
            for (int b = 0; b < m; ++b) {
                auto deg = [&] {
                    int d = 0;
                    for (int a = 0; a < m; ++a)
                        d += adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    return d;
                };
                while (deg() < need)
                    adj[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)))][static_cast<std::size_t>(b)] = 1;
            }
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                        pairs.emplace_back(a, b);
            sampled += check_graph(m, bipartite(m, pairs), true);
        }

        // Hand-computed: c1 = (9/10) C(15,3) C(10,2) = 36855/2, c2 = 5^4 / 5^16.
        auto th = corollary_thresholds(3, 5, probability(1, 10));
        o.require(th.c1 == Rational(36855, 2), "C1 = " + to_pq_string(th.c1));
        o.require(th.c2 == Rational(1, 244140625), "C2 = " + to_pq_string(th.c2));
        o.detail = std::to_string(exhaustive) + " exhaustive graphs (n <= 4) and " + std::to_string(sampled)
            + " seeded graphs (5 <= n <= 7) meet the condition and match; C1 = " + to_pq_string(th.c1)
            + ", C2 = " + to_pq_string(th.c2);
        return o;
    }

    // 6. Lattice membership and robust vectors against brute force.
    auto criterion_lattice() -> Outcome
    {
        Outcome o;
        SplitMix64 rng(2024);
        int members = 0, non_members = 0;
        for (int trial = 0; trial < 300; ++trial) {
            std::size_t r = 1 + rng.below(3);
            std::size_t m = 1 + rng.below(3);
            std::vector<IntVector> gens(m, IntVector(r));
            for (auto & g : gens)
                for (auto & x : g)
                    x = static_cast<long>(rng.below(3)) - 1;
            LatticeBasis lattice(r, gens);
            for (int q = 0; q < 4; ++q) {
                IntVector v(r, 0);
                if (q % 2 == 0)
                    for (auto & x : v)
                        x = static_cast<long>(rng.below(5)) - 2;
                else
                    for (auto & g : gens) {
                        long a = static_cast<long>(rng.below(5)) - 2;
                        for (std::size_t d = 0; d < r; ++d)
                            v[d] += a * g[d];
                    }
                auto c = lattice.express(v);
                o.require(c.has_value() == oracle::in_span(gens, v, 10), "membership disagrees with coefficient search");
                if (c) {
                    ++members;
                    for (std::size_t d = 0; d < r; ++d) {
                        Integer sum = 0;
                        for (std::size_t g = 0; g < m; ++g)
                            sum += (*c)[g] * gens[g][d];
                        o.require(sum == v[d], "returned coefficients do not reproduce the target");
                    }
                }
                else
                    ++non_members;
            }
        }

        int robust = 0, fragile = 0, instances = 0;
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            int n = 8 + static_cast<int>(seed % 3);
            auto h = random_kgraph(n, 3, probability(static_cast<long>(seed % 4) + 3, 10), 9000 + seed);
            VertexSet a, b;
            const int cut = seed % 2 ? n / 2 : 3;
            for (int v = 0; v < n; ++v)
                (v < cut ? a : b).push_back(v);
            VertexPartition p(n, {a, b});
            Rational beta = Rational(static_cast<long>(seed % 3)) / n;
            auto report = robust_vectors(h, p, beta);
            o.require(report.threshold == seed % 3, "threshold floor(beta n)");
            std::map<IndexVector, std::vector<VertexSet>> families;
            for (auto & s : oracle::supporting(h)) {
                IndexVector x(p.size(), 0);
                for (auto v : s)
                    ++x[p.block_of(v)];
                families[x].push_back(s);
            }
            o.require(report.vectors.size() == families.size(), "achieved index vectors differ");
            for (auto & rv : report.vectors) {
                bool expect = oracle::survives(n, families[rv.vector], report.threshold);
                o.require(rv.robust == (expect ? Verdict::yes : Verdict::no), "robustness disagrees with every-W deletion");
                (expect ? robust : fragile)++;
            }
            ++instances;
        }
        o.detail = "1200 membership queries on 300 generator sets (" + std::to_string(members) + " in, "
            + std::to_string(non_members) + " out); " + std::to_string(instances) + " robust-vector instances ("
            + std::to_string(robust) + " robust, " + std::to_string(fragile) + " not)";
        return o;
    }

    // 7. Reachability soundness.
    auto criterion_reach() -> Outcome
    {
        Outcome o;
        int both = 0, cert_yes = 0, cert_no = 0, exact_yes = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            int n = 7 + static_cast<int>(seed % 3);
            int m = static_cast<int>(seed % 4);
            auto h = random_kgraph(n, 3, probability(static_cast<long>(seed % 5) + 4, 10), seed + 1000);
            auto cert = reachable(h, 0, 1, m, 1, ReachMode::certificate);
            auto exact = reachable(h, 0, 1, m, 1, ReachMode::exact);
            o.require(exact.verdict != Verdict::unknown, "exact mode did not terminate");
            ++both;
            bool truth = oracle::survives(n, oracle::connectors(h, 0, 1, 1), static_cast<std::size_t>(m));
            o.require(exact.verdict == (truth ? Verdict::yes : Verdict::no), "exact mode disagrees with the definition");
            if (cert.verdict == Verdict::yes) {
                ++cert_yes;
                o.require(exact.verdict == Verdict::yes, "certificate yes but exact no (seed " + std::to_string(seed) + ")");
                VertexSet used;
                for (auto & c : cert.certificate) {
                    tally.record("connector", validate_connector(h, 0, 1, 1, c, used));
                    used.insert(used.end(), c.set.begin(), c.set.end());
                    std::sort(used.begin(), used.end());
                }
            }
            if (cert.verdict == Verdict::no) {
                ++cert_no;
                o.require(exact.verdict == Verdict::no, "certificate no but exact yes (seed " + std::to_string(seed) + ")");
            }
            exact_yes += exact.verdict == Verdict::yes;
        }
        o.detail = std::to_string(both) + " instances; exact yes " + std::to_string(exact_yes) + "; certificate yes "
            + std::to_string(cert_yes) + ", no " + std::to_string(cert_no) + ", rest unknown";
        return o;
    }

    // 8. Rainbow tilings and color covering homomorphisms.
    auto criterion_rainbow() -> Outcome
    {
        Outcome o;
        auto ext = extremal_construction(3, 15);
        auto no = rainbow_perfect_tiling(GraphFamily(std::vector<KGraph>(9, ext.graph)));
        o.require(no.verdict == Verdict::no, "replicated H_ext(3,15) not decided-no");
        auto complete = GraphFamily(std::vector<KGraph>(9, KGraph::complete(15, 3)));
        auto yes = rainbow_perfect_tiling(complete);
        o.require(yes.verdict == Verdict::yes, "replicated K^3_15 not decided-yes");
        if (yes.tiling)
            o.require(tally.record("rainbow", validate_rainbow_tiling(complete, *yes.tiling)), "rainbow assignment invalid");

        auto t3 = tk_pattern(3);
        int succeeded = 0, pairs = 0;
        std::uint64_t seed = 0;
        while (pairs < 100) {
            int n = 7 + static_cast<int>(seed % 4);
            auto h1 = random_with_codegree(n, 3, 3, 40'000 + seed);
            auto h2 = random_with_codegree(n, 3, 3, 80'000 + seed);
            ++seed;
            if (min_codegree(h1).value < 3 || min_codegree(h2).value < 3)
                continue;
            ++pairs;
            auto c = color_covering_homomorphism(t3, h1, h2);
            bool expect = oracle::covering(t3, h1, h2);
            o.require((c.verdict == Verdict::yes) == expect, "covering disagrees with brute force");
            if (c.verdict == Verdict::yes) {
                ++succeeded;
                tally.record("color covering", validate_color_covering(t3, h1, h2, c));
            }
        }
        o.require(succeeded == pairs, "a pair with minimum codegree >= 3 has no color covering homomorphism");
        o.detail = "H_ext family " + std::string(to_string(no.verdict)) + ", complete family "
            + std::string(to_string(yes.verdict)) + "; covering found on " + std::to_string(succeeded) + "/"
            + std::to_string(pairs) + " pairs (" + std::to_string(seed) + " seeds drawn)";
        return o;
    }

    // 9. Structural validators over everything emitted so far, plus absorbers.
    auto criterion_witnesses() -> Outcome
    {
        Outcome o;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            int n = 12 + static_cast<int>(seed % 4);
            auto h = random_kgraph(n, 3, probability(static_cast<long>(seed % 3) + 6, 10), 7000 + seed);
            VertexSet s{0, 1, 2, 3, 4};
            auto a = find_absorber(h, s, 1);
            if (a.absorber)
                tally.record("absorber", validate_absorber(h, s, 1, *a.absorber));
            auto c = find_connector(h, 0, 1, 1);
            if (c.connector)
                tally.record("connector", validate_connector(h, 0, 1, 1, *c.connector));
        }
        o.require(tally.checked > 0, "no witnesses were checked");
        o.require(tally.failed == 0, tally.first_failure);
        std::ostringstream detail;
        detail << tally.checked << " witnesses, " << tally.failed << " rejected (";
        bool first = true;
        for (auto & [kind, count] : tally.kinds) {
            detail << (first ? "" : ", ") << kind << " " << count;
            first = false;
        }
        detail << ")";
        o.detail = detail.str();
        return o;
    }

    // 10. Determinism across runs and worker counts.
    auto criterion_determinism() -> Outcome
    {
        Outcome o;
        auto fingerprint = [](const KGraph & h, unsigned workers) {
            Json j = Json::object();
            ExactOptions eo;
            eo.workers = workers;
            auto t = perfect_tiling(h, eo);
            j["tile"] = {to_string(t.verdict), t.tiling ? to_json(*t.tiling) : Json(nullptr)};
            auto m = max_tiling(h, eo);
            j["pack"] = {to_string(m.verdict), m.lo, m.hi, to_json(m.tiling)};
            FractionalOptions fo;
            fo.workers = workers;
            auto f = perfect_fractional_tiling(h, fo);
            j["fractile"] = f.tiling ? to_json(*f.tiling) : to_json(*f.certificate);
            auto copies = enumerate_tk_copies(h, {std::nullopt, default_copy_cap, workers});
            j["copies"] = copies.size();
            if (! copies.empty())
                j["first_copy"] = to_json(copies.front());
            auto d = min_codegree(h, workers);
            j["delta"] = {d.value, d.witness};
            RobustOptions ro;
            ro.workers = workers;
            VertexSet a, b;
            for (int v = 0; v < h.n(); ++v)
                (v < h.n() / 2 ? a : b).push_back(v);
            j["robust"] = to_json(robust_vectors(h, VertexPartition(h.n(), {a, b}), Rational(1) / h.n(), ro));
            auto cl = is_closed(h, VertexSet{0, 1, 2}, 1, 1, ReachMode::exact, 5'000'000, workers);
            j["closed"] = {to_string(cl.verdict), cl.failing ? Json{cl.failing->first, cl.failing->second} : Json(nullptr)};
            return j.dump();
        };
        int instances = 0;
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            auto h = random_kgraph(10, 3, probability(static_cast<long>(seed % 3) + 2, 5), 3000 + seed);
            auto one = fingerprint(h, 1);
            o.require(one == fingerprint(h, 1), "library run differs between two runs");
            o.require(one == fingerprint(h, 4), "library run differs between 1 and 4 workers");
            ++instances;
        }

        // CLI reports (timing excluded) and the batch CSV.
        auto dir = fs::temp_directory_path() / ("tktile_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        auto file = [&](const std::string & name) { return (dir / name).string(); };
        write_kgraph(file("ext.txt"), extremal_construction(3, 15).graph);
        write_kgraph(file("rand.txt"), random_kgraph(10, 3, probability(1, 2), 5));
        write_kgraph(file("k5.txt"), KGraph::complete(5, 3));
        write_text_file(file("family.txt"), "k5.txt\nk5.txt\nk5.txt\n");
        std::vector<std::vector<std::string>> commands{
            {"info", file("rand.txt")},
            {"tile", file("ext.txt")},
            {"tile", file("rand.txt")},
            {"pack", file("rand.txt")},
            {"fractile", file("rand.txt"), "--min-max"},
            {"farkas", file("ext.txt")},
            {"lattice", file("rand.txt"), "--partition", "0-4;5-9", "--beta", "1/10"},
            {"lattice", file("rand.txt"), "--partition", "0-4;5-9", "--beta", "1/10", "--from", "0", "--to", "1"},
            {"reach", file("rand.txt"), "--u", "0", "--v", "1", "--m", "1", "--t", "1", "--mode", "exact"},
            {"reach", file("rand.txt"), "--set", "0-3", "--m", "0", "--t", "1"},
            {"absorb", file("rand.txt"), "--set", "0-4", "--t", "1"},
            {"rainbow", file("family.txt")},
            {"rainbow", "--cover", file("rand.txt"), file("rand.txt")},
            {"pipeline", file("ext.txt"), "--gamma", "1/100"},
            {"dh-check", "--k", "3", "--n", "5", "--beta", "1/10"},
        };
        std::string manifest;
        int cli_reports = 0;
        for (std::size_t i = 0; i < commands.size(); ++i) {
            std::vector<std::string> outputs;
            for (auto workers : {"1", "4", "1"}) {
                auto args = commands[i];
                args.push_back("--workers");
                args.push_back(workers);
                std::ostringstream out, err;
                int code = cli::run(args, out, err);
                o.require(code == 0, args[0] + " exited with " + std::to_string(code) + ": " + err.str());
                auto j = Json::parse(out.str().empty() ? "{}" : out.str());
                j.erase("timing_ms");
                if (j.contains("validated"))
                    tally.record("cli " + args[0], j["validated"] == true ? Check::pass() : Check::fail("CLI witness rejected"));
                outputs.push_back(j.dump());
            }
            o.require(outputs[0] == outputs[1] && outputs[0] == outputs[2], commands[i][0] + " report differs across runs");
            ++cli_reports;
            manifest += "row" + std::to_string(i);
            for (auto & a : commands[i])
                manifest += " " + a;
            manifest += "\n";
        }
        write_text_file(file("batch.txt"), manifest);
        auto csv1 = cli::format_csv(cli::run_batch(file("batch.txt"), 1), false);
        auto csv4 = cli::format_csv(cli::run_batch(file("batch.txt"), 4), false);
        o.require(csv1 == csv4, "batch CSV differs between 1 and 4 jobs");
        fs::remove_all(dir);

        o.detail = std::to_string(instances) + " instances x 8 operations, " + std::to_string(cli_reports)
            + " CLI reports and a " + std::to_string(commands.size()) + "-row batch identical across 2 runs and workers {1, 4}";
        return o;
    }
}

int main()
{
    struct Criterion {
        int id;
        const char * name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "extremal construction exactness", criterion_extremal},
        {2, "fractional/Farkas duality", criterion_duality},
        {3, "integral/fractional consistency", criterion_consistency},
        {4, "exact cover vs naive partition search", criterion_exact_cover},
        {5, "Daykin-Haggkvist at k=2, corollary thresholds", criterion_dh},
        {6, "lattice membership and robust vectors", criterion_lattice},
        {7, "reachability soundness", criterion_reach},
        {8, "rainbow tilings and color coverings", criterion_rainbow},
        {9, "structural validators", criterion_witnesses},
        {10, "determinism", criterion_determinism},
    };

    std::cout << "tolerance: exact (rational and integer equality) for every criterion\n";
    int failures = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        }
        catch (const std::exception & e) {
            o.pass = false;
            o.failure = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " [" << timing
                  << "]: " << (o.pass ? o.detail : o.failure) << std::endl;
        failures += ! o.pass;
    }
    return failures == 0 ? 0 : 1;
}
