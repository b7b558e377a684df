#include "tktile/cli.hpp"

#include "tktile/constructions.hpp"
#include "tktile/io.hpp"
#include "tktile/parallel.hpp"
#include "tktile/validate.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tktile::cli {

namespace {
    constexpr std::uint64_t fallback_budget = 50'000'000;

    auto usage(const std::string & message) -> Error { return Error(ErrorKind::invalid_argument, message); }

    auto parse_int(std::string_view text, const char * what) -> int
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
            throw usage(std::string(what) + ": expected a nonnegative integer, got \"" + std::string(text) + "\"");
        return value;
    }

    /// "0-4,7,9" -> {0,1,2,3,4,7,9}, sorted and checked for repeats.
    auto parse_vertex_list(std::string_view text) -> VertexSet
    {
        VertexSet out;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            if (item.empty())
                throw usage("empty item in vertex list \"" + std::string(text) + "\"");
            if (auto dash = item.find('-'); dash != std::string_view::npos) {
                int lo = parse_int(item.substr(0, dash), "vertex range");
                int hi = parse_int(item.substr(dash + 1), "vertex range");
                if (hi < lo)
                    throw usage("descending vertex range \"" + std::string(item) + "\"");
                for (int x = lo; x <= hi; ++x)
                    out.push_back(x);
            }
            else
                out.push_back(parse_int(item, "vertex"));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end())
            throw usage("repeated vertex in \"" + std::string(text) + "\"");
        return out;
    }

    auto parse_blocks(std::string_view text) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> blocks;
        std::size_t start = 0;
        while (true) {
            auto semi = text.find(';', start);
            blocks.push_back(parse_vertex_list(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start)));
            if (semi == std::string_view::npos)
                break;
            start = semi + 1;
        }
        return blocks;
    }

    auto check_vertices(const VertexSet & s, int n, const char * what) -> const VertexSet &
    {
        for (auto x : s)
            if (x >= n)
                throw Error(ErrorKind::invalid_vertex, std::string(what) + " names vertex " + std::to_string(x) + " but n = " + std::to_string(n));
        return s;
    }

    template <typename T>
    auto need(const std::optional<T> & value, const char * flag) -> const T &
    {
        if (! value)
            throw usage(std::string("missing required option ") + flag);
        return *value;
    }

    auto rational_param(const std::optional<std::string> & text, const char * flag) -> Rational
    {
        return parse_rational(need(text, flag));
    }

    auto input(const RunConfig & c, std::size_t i = 0) -> const std::string &
    {
        if (c.inputs.size() <= i)
            throw usage(c.command + " needs an input file");
        return c.inputs[i];
    }

    auto exact_options(const RunConfig & c) -> ExactOptions
    {
        return ExactOptions{c.budget, c.cap, c.workers};
    }

    auto fractional_options(const RunConfig & c) -> FractionalOptions
    {
        return FractionalOptions{c.cap, c.workers, c.column_generation};
    }

    void require_valid(const Check & check, Report & r)
    {
        r.result["validated"] = check.ok;
        if (! check.ok)
            r.result["validation_error"] = check.reason;
    }

    auto total_weight(const FractionalTiling & w) -> Rational
    {
        Rational total = 0;
        for (auto & [copy, weight] : w.weights)
            total += weight;
        return total;
    }

    auto run_gen(const RunConfig & c, Report & r) -> void
    {
        const int k = need(c.k, "--k");
        const int n = need(c.n, "--n");
        if (c.output.empty())
            throw usage("gen needs --output for the hypergraph file");
        std::optional<KGraph> h;
        Json sidecar{{"schema", report_schema_version}, {"kind", c.kind}, {"k", k}, {"n", n}};
        if (c.kind == "extremal") {
            auto ext = extremal_construction(k, n);
            sidecar["a"] = ext.a;
            sidecar["b"] = ext.b;
            h = std::move(ext.graph);
            r.anchor = "extremal-construction";
        }
        else if (c.kind == "random") {
            h = random_kgraph(n, k, rational_param(c.p, "--p"), c.seed);
            sidecar["p"] = *c.p;
            sidecar["seed"] = c.seed;
            r.anchor = "random-instance";
        }
        else if (c.kind == "complete") {
            h = KGraph::complete(n, k);
            r.anchor = "complete-host";
        }
        else if (c.kind == "codegree") {
            h = random_with_codegree(n, k, need(c.delta, "--delta"), c.seed);
            sidecar["delta"] = *c.delta;
            sidecar["seed"] = c.seed;
            r.anchor = "minimum-codegree";
        }
        else
            throw usage("gen kind must be extremal, random, complete or codegree, got \"" + c.kind + "\"");

        write_kgraph(c.output, *h);
        auto sidecar_path = c.sidecar.empty() ? c.output + ".json" : c.sidecar;
        write_text_file(sidecar_path, sidecar.dump(2) + "\n");
        r.value = std::to_string(h->edge_count());
        r.result = Json{{"path", c.output}, {"sidecar", sidecar_path}, {"n", h->n()}, {"k", h->k()}, {"edges", h->edge_count()}};
    }

    void run_info(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        r.anchor = "minimum-codegree";
        auto delta = min_codegree(h, c.workers);
        r.value = std::to_string(delta.value);
        r.result = Json{{"n", h.n()}, {"k", h.k()}, {"edges", h.edge_count()}, {"density", to_pq_string(density(h).value())},
            {"min_codegree", delta.value}, {"min_codegree_witness", delta.witness}};
        if (h.n() >= 2 * h.k() - 1) {
            try {
                auto copies = enumerate_tk_copies(h, {std::nullopt, c.cap, c.workers});
                r.result["tk_copies"] = copies.size();
                r.result["supporting_sets"] = supporting_sets(copies).size();
            }
            catch (const BudgetExceeded & e) {
                r.result["tk_copies"] = nullptr;
                r.result["tk_copies_note"] = e.what();
            }
        }
    }

    void run_tile(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        r.anchor = "perfect-tiling";
        auto d = perfect_tiling(h, exact_options(c));
        r.verdict = d.verdict;
        r.result = Json{{"reason", d.reason}, {"nodes", d.nodes}, {"lazy", d.lazy}};
        if (d.tiling) {
            require_valid(validate_tiling(h, *d.tiling, true), r);
            r.witness = to_json(*d.tiling);
            r.value = std::to_string(d.tiling->copies.size());
        }
    }

    void run_pack(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        r.anchor = "maximum-tiling";
        auto m = max_tiling(h, exact_options(c));
        r.verdict = m.verdict;
        r.value = std::to_string(m.lo);
        r.result = Json{{"bounds", {{"lo", m.lo}, {"hi", m.hi}, {"lp", to_pq_string(m.lp_bound)}}}, {"nodes", m.nodes}};
        require_valid(validate_tiling(h, m.tiling, false), r);
        r.witness = to_json(m.tiling);
    }

    void run_fractile(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        r.anchor = "fractional-tiling";
        auto opts = fractional_options(c);
        auto out = perfect_fractional_tiling(h, opts);
        r.result["columns"] = out.columns;
        if (out.tiling) {
            r.verdict = Verdict::yes;
            r.value = to_pq_string(total_weight(*out.tiling));
            require_valid(validate_fractional_tiling(h, *out.tiling, true), r);
            r.witness = to_json(*out.tiling);
        }
        else {
            r.verdict = Verdict::no;
            auto check = verify_certificate(h, *out.certificate, opts);
            r.value = to_pq_string(check.total);
            r.result["validated"] = check.valid;
            r.witness = Json{{"certificate", to_json(*out.certificate)}};
        }
        if (c.min_max) {
            auto mm = min_max_pair_weight(h, opts);
            r.result["min_max_pair_weight"] = mm.optimum ? Json(to_pq_string(*mm.optimum)) : Json(nullptr);
        }
    }

    void run_farkas(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        r.anchor = "farkas-certificate";
        auto opts = fractional_options(c);
        auto out = perfect_fractional_tiling(h, opts);
        r.result["columns"] = out.columns;
        if (out.certificate) {
            r.verdict = Verdict::yes;
            auto check = verify_certificate(h, *out.certificate, opts);
            r.value = to_pq_string(check.total);
            r.result["validated"] = check.valid;
            r.witness = to_json(*out.certificate);
        }
        else {
            // A perfect fractional tiling rules out every certificate.
            r.verdict = Verdict::no;
            require_valid(validate_fractional_tiling(h, *out.tiling, true), r);
            r.witness = Json{{"fractional_tiling", to_json(*out.tiling)}};
        }
    }

    auto partition_of(const RunConfig & c, int n) -> VertexPartition
    {
        if (! c.partition)
            return VertexPartition::single(n);
        return VertexPartition(n, parse_blocks(*c.partition));
    }

    void run_lattice(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        auto p = partition_of(c, h.n());
        auto beta = rational_param(c.beta, "--beta");
        RobustOptions opts;
        opts.mode = c.mode == "packing" ? RobustMode::packing_bound : RobustMode::exact;
        opts.cap = c.cap;
        opts.budget = c.budget;
        opts.workers = c.workers;
        r.result["blocks"] = p.blocks();

        if (c.from_block || c.to_block) {
            r.anchor = "transferral";
            auto i = static_cast<std::size_t>(need(c.from_block, "--from"));
            auto j = static_cast<std::size_t>(need(c.to_block, "--to"));
            auto tr = has_transferral(h, p, beta, i, j, opts);
            r.verdict = tr.verdict;
            r.result["target"] = to_json(tr.target);
            r.result["robust"] = to_json(tr.robust);
            if (tr.pair)
                r.witness = Json{{"plus", tr.pair->first}, {"minus", tr.pair->second}};
            else if (tr.verdict == Verdict::yes)
                r.witness = Json{{"generators", tr.generators}, {"coefficients", to_json(tr.coefficients)}};
            return;
        }

        r.anchor = "robust-lattice";
        auto report = robust_vectors(h, p, beta, opts);
        r.verdict = report.any_unknown() ? Verdict::unknown : Verdict::yes;
        auto robust = report.robust();
        r.value = std::to_string(robust.size());
        r.result["robust"] = to_json(report);
        auto basis = LatticeBasis::of(p.size(), robust);
        Json hermite = Json::array();
        for (auto & row : basis.hermite())
            hermite.push_back(to_json(row));
        r.result["lattice"] = Json{{"generators", robust}, {"hermite", std::move(hermite)}, {"rank", basis.rank()}};
    }

    auto reach_mode(const RunConfig & c) -> ReachMode
    {
        if (c.mode.empty() || c.mode == "certificate")
            return ReachMode::certificate;
        if (c.mode == "exact")
            return ReachMode::exact;
        throw usage("reach --mode must be certificate or exact, got \"" + c.mode + "\"");
    }

    void run_reach(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        const int m = need(c.m, "--m");
        const int t = need(c.t, "--t");
        auto mode = reach_mode(c);
        r.result["mode"] = mode == ReachMode::exact ? "exact" : "certificate";

        if (c.set) {
            r.anchor = "closedness";
            auto u = check_vertices(parse_vertex_list(*c.set), h.n(), "--set");
            auto cl = is_closed(h, u, m, t, mode, c.budget, c.workers);
            r.verdict = cl.verdict;
            r.value = std::to_string(cl.pairs);
            r.result["pairs"] = cl.pairs;
            if (cl.failing)
                r.result["failing"] = {cl.failing->first, cl.failing->second};
            return;
        }

        r.anchor = "reachability";
        const int u = need(c.u, "--u");
        const int v = need(c.v, "--v");
        auto reach = reachable(h, u, v, m, t, mode, c.budget);
        r.verdict = reach.verdict;
        r.result["nodes"] = reach.nodes;
        r.result["connectors"] = reach.connectors;
        if (mode == ReachMode::exact)
            r.value = std::to_string(reach.connectors);
        if (! reach.certificate.empty()) {
            Check all;
            VertexSet used;
            Json certificate = Json::array();
            for (auto & conn : reach.certificate) {
                if (auto chk = validate_connector(h, u, v, t, conn, used); ! chk && all)
                    all = chk;
                used.insert(used.end(), conn.set.begin(), conn.set.end());
                std::sort(used.begin(), used.end());
                certificate.push_back(to_json(conn));
            }
            require_valid(all, r);
            r.witness = Json{{"connectors", std::move(certificate)}};
            r.value = std::to_string(reach.certificate.size());
        }
        else if (reach.blocker) {
            r.witness = Json{{"blocker", *reach.blocker}};
            r.value = std::to_string(reach.blocker->size());
        }
    }

    void run_absorb(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        r.anchor = "absorber";
        auto s = check_vertices(parse_vertex_list(need(c.set, "--set")), h.n(), "--set");
        const int t = need(c.t, "--t");
        VertexSet forbidden;
        if (c.avoid)
            forbidden = check_vertices(parse_vertex_list(*c.avoid), h.n(), "--avoid");
        auto found = find_absorber(h, s, t, forbidden, c.budget);
        r.verdict = found.verdict;
        r.result["nodes"] = found.nodes;
        if (found.absorber) {
            require_valid(validate_absorber(h, s, t, *found.absorber, forbidden), r);
            r.witness = to_json(*found.absorber);
            r.value = std::to_string(found.absorber->set.size());
        }
    }

    void run_rainbow(const RunConfig & c, Report & r)
    {
        if (c.cover) {
            r.anchor = "color-covering-homomorphism";
            auto h1 = read_kgraph(input(c, 0));
            auto h2 = read_kgraph(input(c, 1));
            auto pattern = tk_pattern(h1.k());
            auto cc = color_covering_homomorphism(pattern, h1, h2, c.budget);
            r.verdict = cc.verdict;
            r.result["nodes"] = cc.nodes;
            if (cc.verdict == Verdict::yes) {
                require_valid(validate_color_covering(pattern, h1, h2, cc), r);
                r.witness = Json{{"map", cc.map}, {"designated", cc.designated}};
                r.value = std::to_string(cc.designated);
            }
            return;
        }
        r.anchor = "rainbow-tiling";
        auto family = read_family(input(c));
        r.result["hosts"] = family.size();
        auto rb = rainbow_perfect_tiling(family, c.budget, c.cap);
        r.verdict = rb.verdict;
        r.result["nodes"] = rb.nodes;
        if (rb.tiling) {
            require_valid(validate_rainbow_tiling(family, *rb.tiling), r);
            r.witness = to_json(*rb.tiling);
            r.value = std::to_string(rb.tiling->tiling.copies.size());
        }
    }

    void run_pipeline(const RunConfig & c, Report & r)
    {
        auto h = read_kgraph(input(c));
        r.anchor = "extremal-case-construction";
        PipelineOptions opts;
        if (c.extremal_set)
            opts.witness = check_vertices(parse_vertex_list(*c.extremal_set), h.n(), "--extremal-set");
        if (c.gamma_prime)
            opts.gamma_prime = parse_rational(*c.gamma_prime);
        if (c.beta)
            opts.beta = parse_rational(*c.beta);
        opts.budget = c.budget;
        opts.fallback = c.fallback;
        auto res = extremal_pipeline(h, rational_param(c.gamma, "--gamma"), opts);
        r.verdict = res.verdict;
        Json stages = Json::array();
        for (auto & s : res.stages)
            stages.push_back(to_json(s));
        r.result["stages"] = std::move(stages);
        r.result["used_fallback"] = res.used_fallback;
        if (auto * f = res.failure())
            r.value = f->stage;
        if (res.tiling) {
            require_valid(validate_tiling(h, *res.tiling, true), r);
            r.witness = to_json(*res.tiling);
        }
    }

    void run_dh_check(const RunConfig & c, Report & r)
    {
        r.anchor = "daykin-haggkvist";
        if (c.inputs.empty()) {
            // Threshold arithmetic only.
            auto th = corollary_thresholds(need(c.k, "--k"), need(c.n, "--n"), rational_param(c.beta, "--beta"));
            r.result = Json{{"c1", to_pq_string(th.c1)}, {"c2", to_pq_string(th.c2)}};
            r.value = to_pq_string(th.c2);
            return;
        }
        auto j = read_kgraph(input(c));
        auto classes = parse_blocks(need(c.classes, "--classes"));
        for (auto & cls : classes)
            check_vertices(cls, j.n(), "--classes");
        auto dh = dh_condition(j, classes);
        r.result["condition"] = Json{{"holds", dh.holds}, {"worst_vertex", dh.worst_vertex},
            {"worst_degree", dh.worst_degree}, {"threshold", to_pq_string(dh.threshold)}};
        auto mt = kpartite_perfect_matching(j, classes, c.budget);
        r.verdict = mt.verdict;
        r.result["nodes"] = mt.nodes;
        r.value = dh.holds ? "condition-holds" : "condition-fails";
        if (mt.verdict == Verdict::yes) {
            require_valid(validate_perfect_matching(j, classes, mt.edges), r);
            r.witness = mt.edges;
        }
    }

    auto csv_field(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n\r") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"')
                out += '"';
            out += ch;
        }
        return out + "\"";
    }

    /// Outcome of one command line, without touching stdout.
    struct Execution {
        int exit_code = 1;
        std::optional<Report> report;
        std::string error;
        std::string command;
    };

    auto execute(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> Execution;
}

auto RunConfig::echo() const -> Json
{
    Json j{{"command", command}};
    if (! kind.empty())
        j["kind"] = kind;
    if (! inputs.empty())
        j["inputs"] = inputs;
    auto put = [&](const char * key, const auto & opt) {
        if (opt)
            j[key] = *opt;
    };
    put("k", k);
    put("n", n);
    put("gamma", gamma);
    put("gamma_prime", gamma_prime);
    put("beta", beta);
    put("p", p);
    put("t", t);
    put("m", m);
    put("u", u);
    put("v", v);
    put("delta", delta);
    put("from", from_block);
    put("to", to_block);
    put("partition", partition);
    put("set", set);
    put("classes", classes);
    put("avoid", avoid);
    put("extremal_set", extremal_set);
    j["seed"] = seed;
    j["budget"] = budget;
    j["cap"] = cap;
    if (! mode.empty())
        j["mode"] = mode;
    if (fallback)
        j["fallback"] = true;
    if (column_generation)
        j["column_generation"] = true;
    if (min_max)
        j["min_max"] = true;
    if (cover)
        j["cover"] = true;
    return j;
}

auto Report::to_json(bool timing) const -> Json
{
    Json j{{"schema", report_schema_version}, {"tool", "tktile"}, {"version", tool_version}, {"command", command},
        {"anchor", anchor}, {"config", config}};
    if (verdict)
        j["status"] = tktile::to_string(*verdict);
    j["value"] = value;
    for (auto & [key, val] : result.items())
        j[key] = val;
    if (! witness.is_null())
        j["witness"] = witness;
    if (! witness_path.empty())
        j["witness_path"] = witness_path;
    if (timing)
        j["timing_ms"] = ms;
    return j;
}

auto default_budget() -> std::uint64_t
{
    const char * env = std::getenv("TKTILE_BUDGET");
    if (! env || ! *env)
        return fallback_budget;
    std::uint64_t value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw usage("TKTILE_BUDGET must be a positive integer, got \"" + std::string(text) + "\"");
    return value;
}

void validate(const RunConfig & c)
{
    auto unit = [](const std::optional<std::string> & text, const char * flag, bool allow_zero) {
        if (! text)
            return;
        auto q = parse_rational(*text);
        if (q > 1 || q < 0 || (! allow_zero && q == 0))
            throw usage(std::string(flag) + " must lie in " + (allow_zero ? "[0, 1]" : "(0, 1]") + ", got " + *text);
    };
    unit(c.gamma, "--gamma", false);
    unit(c.gamma_prime, "--gamma-prime", false);
    unit(c.beta, "--beta", true);
    unit(c.p, "--p", true);
    if (c.k && *c.k < 2)
        throw usage("--k must be at least 2");
    if (c.n && *c.n < 1)
        throw usage("--n must be positive");
    if (c.t && *c.t < 1)
        throw usage("--t must be positive");
    if (c.budget == 0)
        throw usage("--budget must be positive");
    if (c.cap == 0)
        throw usage("--cap must be positive");
    if (c.workers == 0)
        throw usage("--workers must be positive");
    if (c.command == "lattice" && ! c.mode.empty() && c.mode != "exact" && c.mode != "packing")
        throw usage("lattice --mode must be exact or packing, got \"" + c.mode + "\"");
    if (c.command == "reach" && ! c.mode.empty() && c.mode != "exact" && c.mode != "certificate")
        throw usage("reach --mode must be certificate or exact, got \"" + c.mode + "\"");
    if (c.command == "rainbow" && c.cover && c.inputs.size() != 2)
        throw usage("rainbow --cover needs two host files");
}

auto dispatch(const RunConfig & config) -> Report
{
    validate(config);
    Report r;
    r.command = config.command;
    r.config = config.echo();
    auto start = std::chrono::steady_clock::now();
    try {
        const auto & cmd = config.command;
        if (cmd == "gen")
            run_gen(config, r);
        else if (cmd == "info")
            run_info(config, r);
        else if (cmd == "tile")
            run_tile(config, r);
        else if (cmd == "pack")
            run_pack(config, r);
        else if (cmd == "fractile")
            run_fractile(config, r);
        else if (cmd == "farkas")
            run_farkas(config, r);
        else if (cmd == "lattice")
            run_lattice(config, r);
        else if (cmd == "reach")
            run_reach(config, r);
        else if (cmd == "absorb")
            run_absorb(config, r);
        else if (cmd == "rainbow")
            run_rainbow(config, r);
        else if (cmd == "pipeline")
            run_pipeline(config, r);
        else if (cmd == "dh-check")
            run_dh_check(config, r);
        else
            throw usage("unknown command \"" + cmd + "\"");
    }
    catch (const BudgetExceeded & e) {
        r.verdict = Verdict::unknown;
        r.witness = nullptr;
        r.result["budget_error"] = e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (! config.witness_path.empty() && ! r.witness.is_null()) {
        write_text_file(config.witness_path, r.witness.dump(2) + "\n");
        r.witness_path = config.witness_path;
    }
    return r;
}

auto parse_args(const std::vector<std::string> & args, std::ostream & out, std::ostream & err, int & exit_code)
    -> std::optional<RunConfig>
{
    RunConfig c;
    c.budget = default_budget();

    CLI::App app{"Exact finite-instance tools for generalised triangle tilings of k-graphs.", "tktile"};
    app.require_subcommand(1, 1);
    auto common = [&](CLI::App * sub, bool with_input) {
        if (with_input)
            sub->add_option("input", c.inputs, "Hypergraph file(s)");
        sub->add_option("--budget", c.budget, "Search node budget (default TKTILE_BUDGET or 50000000)");
        sub->add_option("--cap", c.cap, "Copy enumeration cap");
        sub->add_option("--workers", c.workers, "Worker threads");
        sub->add_option("-o,--output", c.output, "Write the JSON report here instead of stdout");
        sub->add_option("--witness", c.witness_path, "Also write the witness JSON to this file");
    };

    auto * gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("kind", c.kind, "extremal | random | complete | codegree")->required();
    gen->add_option("--k", c.k, "Uniformity")->required();
    gen->add_option("--n", c.n, "Vertices")->required();
    gen->add_option("--p", c.p, "Edge probability p/q (random)");
    gen->add_option("--delta", c.delta, "Target minimum codegree (codegree)");
    gen->add_option("--seed", c.seed, "64-bit seed");
    gen->add_option("-o,--output", c.output, "Hypergraph file to write")->required();
    gen->add_option("--sidecar", c.sidecar, "Metadata JSON (default <output>.json)");

    auto * info = app.add_subcommand("info", "Basic statistics of a hypergraph");
    common(info, true);

    common(app.add_subcommand("tile", "Decide perfect T_k-tiling by exact cover"), true);
    common(app.add_subcommand("pack", "Maximum T_k-tiling by branch and bound"), true);

    auto * fractile = app.add_subcommand("fractile", "Perfect fractional tiling or a Farkas certificate");
    common(fractile, true);
    fractile->add_flag("--column-generation", c.column_generation, "Stream columns instead of enumerating copies");
    fractile->add_flag("--min-max", c.min_max, "Also minimise the largest pair weight");

    auto * farkas = app.add_subcommand("farkas", "Search for a fractional infeasibility certificate");
    common(farkas, true);
    farkas->add_flag("--column-generation", c.column_generation, "Stream columns instead of enumerating copies");

    auto * lattice = app.add_subcommand("lattice", "Robust index vectors and their lattice");
    common(lattice, true);
    lattice->add_option("--partition", c.partition, "Blocks, e.g. \"0-4;5-14\" (default one block)");
    lattice->add_option("--beta", c.beta, "Robustness fraction p/q")->required();
    lattice->add_option("--mode", c.mode, "exact | packing");
    lattice->add_option("--from", c.from_block, "Transferral u_i - u_j: block i");
    lattice->add_option("--to", c.to_block, "Transferral u_i - u_j: block j");

    auto * reach = app.add_subcommand("reach", "Reachability of a pair, or closedness of a set");
    common(reach, true);
    reach->add_option("--u", c.u, "First vertex");
    reach->add_option("--v", c.v, "Second vertex");
    reach->add_option("--m", c.m, "Vertices a blocker may remove")->required();
    reach->add_option("--t", c.t, "Connector size parameter")->required();
    reach->add_option("--mode", c.mode, "certificate | exact");
    reach->add_option("--set", c.set, "Check every pair of this set instead");

    auto * absorb = app.add_subcommand("absorb", "Search for an absorber");
    common(absorb, true);
    absorb->add_option("--set", c.set, "The set S to absorb")->required();
    absorb->add_option("--t", c.t, "Absorber size parameter")->required();
    absorb->add_option("--avoid", c.avoid, "Vertices the absorber must avoid");

    auto * rainbow = app.add_subcommand("rainbow", "Rainbow perfect tiling of a family manifest");
    common(rainbow, true);
    rainbow->add_flag("--cover", c.cover, "Inputs are H1 H2: find a color covering homomorphism of T_k");

    auto * pipeline = app.add_subcommand("pipeline", "Run the extremal-case construction stage by stage");
    common(pipeline, true);
    pipeline->add_option("--gamma", c.gamma, "Extremality parameter p/q")->required();
    pipeline->add_option("--gamma-prime", c.gamma_prime, "Override gamma'");
    pipeline->add_option("--beta", c.beta, "Override beta");
    pipeline->add_option("--extremal-set", c.extremal_set, "Use this gamma-extremal set");
    pipeline->add_flag("--fallback", c.fallback, "Fall back to exact cover on failure");

    auto * dh = app.add_subcommand("dh-check", "Degree condition and perfect matching of a k-partite k-graph");
    common(dh, true);
    dh->add_option("--classes", c.classes, "Vertex classes, e.g. \"0-2;3-5\"");
    dh->add_option("--k", c.k, "Threshold arithmetic only: k");
    dh->add_option("--n", c.n, "Threshold arithmetic only: n");
    dh->add_option("--beta", c.beta, "Threshold arithmetic only: beta");

    auto * batch = app.add_subcommand("batch", "Run a manifest of command lines and print a CSV");
    batch->add_option("manifest", c.inputs, "Manifest file")->required()->expected(1);
    batch->add_option("--jobs", c.jobs, "Rows run concurrently");
    batch->add_option("-o,--output", c.output, "CSV file (default stdout)");

    std::vector<const char *> argv{"tktile"};
    for (auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError & e) {
        exit_code = app.exit(e, out, err);
        if (exit_code != 0)
            exit_code = 1;
        return std::nullopt;
    }
    c.command = app.get_subcommands().front()->get_name();
    return c;
}

auto run_batch(const std::filesystem::path & manifest, unsigned jobs) -> std::vector<BatchRow>
{
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(read_text_file(manifest));
    for (std::string line; std::getline(in, line);) {
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;)
            tokens.push_back(w);
        if (tokens.empty() || tokens.front().starts_with('#'))
            continue;
        lines.push_back(std::move(tokens));
    }

    std::vector<BatchRow> rows(lines.size());
    parallel_for(lines.size(), std::max(1u, jobs), [&](std::size_t i) {
        auto & tokens = lines[i];
        auto & row = rows[i];
        row.id = tokens.front();
        std::vector<std::string> args(tokens.begin() + 1, tokens.end());
        row.command = args.empty() ? "" : args.front();
        auto start = std::chrono::steady_clock::now();
        std::ostringstream out, err;
        Execution ex;
        if (row.command == "batch")
            ex.error = "nested batch rows are not allowed";
        else
            ex = execute(args, out, err);
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (ex.report) {
            row.verdict = ex.report->verdict ? std::string(to_string(*ex.report->verdict)) : "";
            row.value = ex.report->value;
            row.witness_path = ex.report->witness_path;
        }
        else {
            row.verdict = "error";
            row.value = ex.error;
            if (row.value.empty()) {
                auto text = err.str();
                row.value = text.empty() ? "usage error" : text.substr(0, text.find('\n'));
            }
        }
    });
    return rows;
}

auto format_csv(const std::vector<BatchRow> & rows, bool timing) -> std::string
{
    std::ostringstream out;
    out << "id,command,verdict,value,witness_path,ms\n";
    for (auto & r : rows) {
        out << csv_field(r.id) << ',' << csv_field(r.command) << ',' << csv_field(r.verdict) << ','
            << csv_field(r.value) << ',' << csv_field(r.witness_path) << ',';
        if (timing)
            out << static_cast<long long>(r.ms);
        out << '\n';
    }
    return out.str();
}

namespace {
    auto execute(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> Execution
    {
        Execution ex;
        try {
            int code = 0;
            auto config = parse_args(args, out, err, code);
            if (! config) {
                ex.exit_code = code;
                return ex;
            }
            ex.command = config->command;
            if (config->command == "batch") {
                auto rows = run_batch(config->inputs.at(0), config->jobs);
                auto csv = format_csv(rows);
                if (config->output.empty())
                    out << csv;
                else
                    write_text_file(config->output, csv);
                ex.exit_code = 0;
                return ex;
            }
            auto report = dispatch(*config);
            auto doc = report.to_json().dump(2) + "\n";
            if (config->output.empty() || config->command == "gen")
                out << doc;
            else
                write_text_file(config->output, doc);
            ex.exit_code = report.exit_code();
            ex.report = std::move(report);
        }
        catch (const std::exception & e) {
            ex.error = e.what();
            err << "tktile: " << e.what() << "\n";
            ex.exit_code = 1;
        }
        return ex;
    }
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    return execute(args, out, err).exit_code;
}

}
