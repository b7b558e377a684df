#include "tktile/rainbow.hpp"

#include "tktile/embed.hpp"
#include "tktile/exact.hpp"
#include "tktile/exact_cover.hpp"
#include "tktile/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tktile {

GraphFamily::GraphFamily(std::vector<KGraph> hosts) :
    _hosts(std::move(hosts))
{
    if (_hosts.empty())
        throw Error(ErrorKind::invalid_family, "a family needs at least one host");
    for (auto & h : _hosts)
        if (h.n() != _hosts.front().n() || h.k() != _hosts.front().k())
            throw Error(ErrorKind::invalid_family, "hosts must share n and k");
}

auto GraphFamily::union_graph() const -> KGraph
{
    std::set<Edge> all;
    for (auto & h : _hosts)
        all.insert(h.edges().begin(), h.edges().end());
    return KGraph(n(), k(), std::vector<Edge>(all.begin(), all.end()));
}

auto read_family(const std::filesystem::path & manifest) -> GraphFamily
{
    std::istringstream in(read_text_file(manifest));
    std::vector<KGraph> hosts;
    std::string line;
    while (std::getline(in, line)) {
        while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::filesystem::path p = line.substr(start);
        if (p.is_relative())
            p = manifest.parent_path() / p;
        hosts.push_back(read_kgraph(p));
    }
    if (hosts.empty())
        throw Error(ErrorKind::invalid_family, manifest.string() + " lists no hosts");
    return GraphFamily(std::move(hosts));
}

namespace {
    /// Kuhn's augmenting paths from slots to hosts, hosts tried in ascending order.
    struct SlotMatcher {
        const std::vector<std::vector<int>> & options;
        std::vector<int> host_of_slot;
        std::vector<int> slot_of_host;
        std::vector<int> seen;
        int stamp = 0;

        SlotMatcher(const std::vector<std::vector<int>> & opts, std::size_t hosts) :
            options(opts),
            slot_of_host(hosts, -1),
            seen(hosts, 0)
        {
        }

        auto augment(int slot) -> bool
        {
            for (auto h : options[static_cast<std::size_t>(slot)]) {
                auto hs = static_cast<std::size_t>(h);
                if (seen[hs] == stamp)
                    continue;
                seen[hs] = stamp;
                if (slot_of_host[hs] < 0 || augment(slot_of_host[hs])) {
                    slot_of_host[hs] = slot;
                    host_of_slot[static_cast<std::size_t>(slot)] = h;
                    return true;
                }
            }
            return false;
        }

        /// Matches every slot, or reports failure.
        auto run() -> bool
        {
            host_of_slot.assign(options.size(), -1);
            std::fill(slot_of_host.begin(), slot_of_host.end(), -1);
            for (std::size_t s = 0; s < options.size(); ++s) {
                ++stamp;
                if (! augment(static_cast<int>(s)))
                    return false;
            }
            return true;
        }
    };
}

auto rainbow_perfect_tiling(const GraphFamily & family, std::uint64_t budget, std::uint64_t cap) -> RainbowResult
{
    const int n = family.n(), k = family.k(), s = 2 * k - 1;
    if (n % s != 0)
        throw Error(ErrorKind::divisibility, "a perfect tiling needs (2k-1) | n");
    const std::size_t m = static_cast<std::size_t>(3 * n / s);
    if (family.size() != m)
        throw Error(ErrorKind::invalid_family, "the family must have 3n/(2k-1) = " + std::to_string(m) + " hosts, not "
            + std::to_string(family.size()));

    RainbowResult result;
    auto all = family.union_graph();
    // A rainbow tiling is a tiling of the union, so a refutation there settles it.
    ExactOptions eo;
    eo.budget = budget;
    eo.cap = cap;
    auto plain = perfect_tiling(all, eo);
    result.nodes = plain.nodes;
    if (plain.verdict == Verdict::no) {
        result.verdict = Verdict::no;
        return result;
    }

    EnumerateOptions en;
    en.cap = cap;
    auto copies = enumerate_tk_copies(all, en);
    std::vector<std::vector<int>> rows;
    std::vector<std::array<std::vector<int>, 3>> slot_hosts;
    for (auto & c : copies) {
        rows.push_back(c.vertices());
        std::array<std::vector<int>, 3> hosts;
        auto edges = c.edges();
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < m; ++i)
                if (family.host(i).has_edge(edges[j]))
                    hosts[j].push_back(static_cast<int>(i));
        slot_hosts.push_back(std::move(hosts));
    }

    std::vector<std::vector<int>> options;
    auto load = [&](const std::vector<std::size_t> & partial) {
        options.clear();
        for (auto r : partial)
            for (auto & hs : slot_hosts[r])
                options.push_back(hs);
    };
    ExactCover cover(n, rows);
    auto r = cover.solve(budget, [&](const std::vector<std::size_t> & partial) {
        load(partial);
        return SlotMatcher(options, m).run();
    });
    result.nodes += r.nodes;
    result.verdict = r.verdict;
    if (r.verdict != Verdict::yes)
        return result;

    // Order copies canonically, then assign hosts to their slots in that order.
    auto chosen = r.rows;
    std::sort(chosen.begin(), chosen.end(), [&](auto a, auto b) { return copies[a] < copies[b]; });
    load(chosen);
    SlotMatcher matcher(options, m);
    matcher.run();
    RainbowTiling rt;
    for (auto i : chosen)
        rt.tiling.copies.push_back(copies[i]);
    rt.assignment = matcher.host_of_slot;
    result.tiling = std::move(rt);
    return result;
}

auto color_covering_homomorphism(const KGraph & pattern, const KGraph & h1, const KGraph & h2, std::uint64_t budget)
    -> ColorCovering
{
    if (h1.n() != h2.n())
        throw Error(ErrorKind::invalid_family, "H_1 and H_2 must share a vertex set");
    ColorCovering out;
    out.verdict = Verdict::no;
    bool undecided = false;
    for (std::size_t e = 0; e < pattern.edge_count(); ++e) {
        EmbeddingProblem problem;
        problem.pattern = &pattern;
        problem.hosts = {&h1, &h2};
        problem.edge_host.assign(pattern.edge_count(), 1);
        problem.edge_host[e] = 0;
        auto r = find_embedding(problem, budget);
        out.nodes += r.nodes;
        if (r.verdict == Verdict::yes) {
            out.verdict = Verdict::yes;
            out.map = std::move(r.map);
            out.designated = e;
            return out;
        }
        undecided |= r.verdict == Verdict::unknown;
    }
    if (undecided)
        out.verdict = Verdict::unknown;
    return out;
}

}
