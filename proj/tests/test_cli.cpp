#include "tktile/cli.hpp"
#include "tktile/constructions.hpp"
#include "tktile/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <unistd.h>

using namespace tktile;
namespace fs = std::filesystem;

namespace {
    struct Scratch {
        fs::path dir;

        Scratch()
        {
            dir = fs::temp_directory_path() / ("tktile_cli_" + std::to_string(::getpid()));
            fs::create_directories(dir);
        }
        ~Scratch() { fs::remove_all(dir); }

        auto operator/(const std::string & name) const -> std::string { return (dir / name).string(); }
    };

    struct Outcome {
        int code;
        std::string out, err;

        auto json() const -> Json { return Json::parse(out); }
    };

    auto invoke(std::vector<std::string> args) -> Outcome
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto verdict_fields(const Outcome & o) -> std::string
    {
        auto j = o.json();
        j.erase("timing_ms");
        return j.dump();
    }
}

TEST_CASE("generated instances re-parse to the same edge set")
{
    Scratch tmp;
    for (auto kind : {"extremal", "random", "complete", "codegree"}) {
        auto path = tmp / (std::string(kind) + ".txt");
        auto g = invoke({"gen", kind, "--k", "3", "--n", "10", "--p", "1/3", "--delta", "2", "--seed", "7", "-o", path});
        REQUIRE(g.code == 0);
        auto h = read_kgraph(path);
        CHECK(parse_kgraph(format_kgraph(h)) == h);
        auto meta = Json::parse(read_text_file(path + ".json"));
        CHECK(meta["kind"] == kind);
        CHECK(g.json()["edges"] == h.edge_count());
    }
    auto ext = read_kgraph(tmp / "extremal.txt");
    CHECK(ext == extremal_construction(3, 10).graph);
    CHECK(read_kgraph(tmp / "random.txt") == random_kgraph(10, 3, Rational(1) / 3, 7));
    CHECK(Json::parse(read_text_file(tmp / "extremal.txt.json"))["a"] == std::vector<int>{0, 1, 2});
}

TEST_CASE("gen extremal then tile is decided-no")
{
    Scratch tmp;
    auto path = tmp / "ext.txt";
    REQUIRE(invoke({"gen", "extremal", "--k", "3", "--n", "15", "-o", path}).code == 0);
    auto t = invoke({"tile", path});
    CHECK(t.code == 0);
    CHECK(t.json()["status"] == "decided-no");
    CHECK(t.json()["schema"] == report_schema_version);
    CHECK(t.json()["config"]["inputs"][0] == path);
}

TEST_CASE("info on the complete 3-graph with 5 vertices")
{
    Scratch tmp;
    auto path = tmp / "k5.txt";
    write_kgraph(path, KGraph::complete(5, 3));
    auto i = invoke({"info", path});
    REQUIRE(i.code == 0);
    auto j = i.json();
    CHECK(j["min_codegree"] == 3);
    CHECK(j["value"] == "3");
    CHECK(j["density"] == "1/1");
    CHECK(! j.contains("status"));
}

TEST_CASE("farkas on H_ext(3,15) gives the (3,-2) certificate up to scaling")
{
    Scratch tmp;
    auto path = tmp / "ext.txt";
    write_kgraph(path, extremal_construction(3, 15).graph);
    auto f = invoke({"farkas", path, "--witness", tmp / "cert.json"});
    REQUIRE(f.code == 0);
    auto j = f.json();
    CHECK(j["status"] == "decided-yes");
    CHECK(j["validated"] == true);
    std::vector<Rational> a;
    for (auto & q : j["witness"]["a"])
        a.push_back(parse_rational(q.get<std::string>()));
    REQUIRE(a.size() == 15);
    // Proportional to 3 on A and -2 on B with a positive factor.
    Rational scale = a[0] / 3;
    CHECK(scale > 0);
    for (int v = 0; v < 15; ++v)
        CHECK(a[static_cast<std::size_t>(v)] == scale * (v < 5 ? 3 : -2));
    CHECK(Json::parse(read_text_file(tmp / "cert.json")) == j["witness"]);
    CHECK(j["witness_path"] == tmp / "cert.json");
}

TEST_CASE("exit codes follow verdict classes")
{
    Scratch tmp;
    auto ext = tmp / "ext.txt";
    auto k10 = tmp / "k10.txt";
    write_kgraph(ext, extremal_construction(3, 15).graph);
    write_kgraph(k10, KGraph::complete(10, 3));

    struct Case {
        std::vector<std::string> args;
        int code;
        const char * status;
    };
    std::vector<Case> corpus{
        {{"tile", ext}, 0, "decided-no"},
        {{"tile", k10}, 0, "decided-yes"},
        {{"pack", ext}, 0, "decided-yes"},
        {{"fractile", k10}, 0, "decided-yes"},
        {{"fractile", ext}, 0, "decided-no"},
        {{"farkas", k10}, 0, "decided-no"},
        {{"tile", ext, "--budget", "1"}, 2, "unknown-budget"},
        {{"tile", ext, "--cap", "1"}, 0, "decided-no"},
        {{"pipeline", ext, "--gamma", "1/100"}, 0, "decided-no"},
        {{"reach", k10, "--u", "0", "--v", "1", "--m", "1", "--t", "1"}, 0, "decided-yes"},
        {{"absorb", k10, "--set", "0-4", "--t", "1"}, 0, "decided-yes"},
        {{"lattice", k10, "--beta", "1/10", "--partition", "0-4;5-9"}, 0, "decided-yes"},
        {{"lattice", k10, "--beta", "1/10", "--partition", "0-4;5-9", "--from", "0", "--to", "1"}, 0, "decided-yes"},
    };
    for (auto & c : corpus) {
        CAPTURE(c.args[0]);
        auto o = invoke(c.args);
        CHECK(o.code == c.code);
        CHECK(o.json()["status"] == c.status);
    }

    // Usage and input errors.
    for (std::vector<std::string> bad : {
             std::vector<std::string>{},
             {"bogus"},
             {"tile"},
             {"tile", tmp / "missing.txt"},
             {"pipeline", ext, "--gamma", "0.01"},
             {"pipeline", ext, "--gamma", "3/2"},
             {"lattice", k10, "--beta", "1/10", "--partition", "0-4;4-9"},
             {"lattice", k10, "--beta", "1/10", "--mode", "fast"},
             {"gen", "wheel", "--k", "3", "--n", "5", "-o", tmp / "w.txt"},
             {"absorb", k10, "--set", "0-40", "--t", "1"},
         }) {
        CAPTURE(bad.size());
        auto o = invoke(bad);
        CHECK(o.code == 1);
        CHECK(! o.err.empty());
    }
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("rational parameters are exact")
{
    Scratch tmp;
    auto ext = tmp / "ext.txt";
    write_kgraph(ext, extremal_construction(3, 15).graph);
    auto a = invoke({"pipeline", ext, "--gamma", "1/100"});
    auto b = invoke({"pipeline", ext, "--gamma", "2/200"});
    REQUIRE(a.code == 0);
    // Same rational, same stages; only the config echo differs.
    auto ja = a.json(), jb = b.json();
    CHECK(ja["stages"] == jb["stages"]);
    auto d = invoke({"dh-check", "--k", "3", "--n", "5", "--beta", "1/2"});
    CHECK(d.json()["c2"] == "1/244140625");
}

TEST_CASE("reports are reproducible apart from timing")
{
    Scratch tmp;
    auto h = tmp / "h.txt";
    write_kgraph(h, random_kgraph(10, 3, Rational(1) / 2, 3));
    for (auto cmd : {"tile", "pack", "fractile", "farkas", "info"}) {
        auto one = invoke({cmd, h});
        auto two = invoke({cmd, h, "--workers", "4"});
        auto j1 = one.json(), j2 = two.json();
        j1.erase("config");
        j2.erase("config");
        j1.erase("timing_ms");
        j2.erase("timing_ms");
        CHECK(j1 == j2);
        CHECK(verdict_fields(one) == verdict_fields(invoke({cmd, h})));
    }
}

TEST_CASE("TKTILE_BUDGET sets the default budget")
{
    Scratch tmp;
    auto ext = tmp / "ext.txt";
    write_kgraph(ext, extremal_construction(3, 15).graph);
    ::setenv("TKTILE_BUDGET", "1", 1);
    auto low = invoke({"tile", ext});
    auto flag = invoke({"tile", ext, "--budget", "100000000"});
    ::setenv("TKTILE_BUDGET", "lots", 1);
    auto bad = invoke({"tile", ext});
    ::unsetenv("TKTILE_BUDGET");
    CHECK(low.code == 2);
    CHECK(low.json()["config"]["budget"] == 1);
    CHECK(flag.code == 0);
    CHECK(bad.code == 1);
}

TEST_CASE("batch runner")
{
    Scratch tmp;
    auto ext = tmp / "ext.txt";
    auto k5 = tmp / "k5.txt";
    write_kgraph(ext, extremal_construction(3, 15).graph);
    write_kgraph(k5, KGraph::complete(5, 3));

    SUBCASE("empty manifest gives the header only")
    {
        write_text_file(tmp / "empty.txt", "# nothing\n\n");
        auto o = invoke({"batch", tmp / "empty.txt"});
        CHECK(o.code == 0);
        CHECK(o.out == "id,command,verdict,value,witness_path,ms\n");
    }

    SUBCASE("rows keep manifest order and failures are recorded")
    {
        std::string manifest = "a tile " + ext + "\n" + "b info " + k5 + "\n" + "c tile " + tmp / "missing.txt" + "\n"
            + "d tile " + ext + " --budget 1\n" + "e farkas " + ext + " --witness " + tmp / "w.json" + "\n" + "a2 tile " + ext
            + "\n" + "f nonsense\n" + "g tile " + k5 + "\n";
        write_text_file(tmp / "m.txt", manifest);
        for (unsigned jobs : {1u, 4u}) {
            auto rows = cli::run_batch(tmp / "m.txt", jobs);
            REQUIRE(rows.size() == 8);
            std::vector<std::string> ids, verdicts;
            for (auto & r : rows) {
                ids.push_back(r.id);
                verdicts.push_back(r.verdict);
            }
            CHECK(ids == std::vector<std::string>{"a", "b", "c", "d", "e", "a2", "f", "g"});
            CHECK(verdicts == std::vector<std::string>{"decided-no", "", "error", "unknown-budget", "decided-yes",
                                  "decided-no", "error", "decided-yes"});
            CHECK(rows[1].value == "3");
            CHECK(rows[4].value == "-5/1");
            CHECK(rows[4].witness_path == tmp / "w.json");
            CHECK(rows[2].value.find("missing.txt") != std::string::npos);
            // Duplicate rows give identical outputs.
            CHECK(rows[0].verdict == rows[5].verdict);
            CHECK(rows[0].value == rows[5].value);
        }
        CHECK(cli::format_csv(cli::run_batch(tmp / "m.txt", 1), false)
            == cli::format_csv(cli::run_batch(tmp / "m.txt", 3), false));

        auto o = invoke({"batch", tmp / "m.txt", "--jobs", "2", "-o", tmp / "out.csv"});
        CHECK(o.code == 0);
        auto csv = read_text_file(tmp / "out.csv");
        CHECK(csv.starts_with("id,command,verdict,value,witness_path,ms\na,tile,decided-no,"));
    }
}
