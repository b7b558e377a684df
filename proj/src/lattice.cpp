#include "tktile/lattice.hpp"

#include "tktile/exact.hpp"
#include "tktile/hitting_set.hpp"
#include "tktile/parallel.hpp"

#include <algorithm>
#include <map>

namespace tktile {

VertexPartition::VertexPartition(int n, std::vector<VertexSet> blocks) :
    _n(n),
    _blocks(std::move(blocks)),
    _block_of(static_cast<std::size_t>(std::max(n, 0)), SIZE_MAX)
{
    if (n < 0)
        throw Error(ErrorKind::invalid_argument, "negative vertex count");
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
        auto & b = _blocks[i];
        if (b.empty())
            throw Error(ErrorKind::invalid_argument, "block " + std::to_string(i + 1) + " is empty");
        std::sort(b.begin(), b.end());
        for (auto v : b) {
            if (v < 0 || v >= n)
                throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " out of range");
            if (_block_of[static_cast<std::size_t>(v)] != SIZE_MAX)
                throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(v) + " lies in two blocks");
            _block_of[static_cast<std::size_t>(v)] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (_block_of[static_cast<std::size_t>(v)] == SIZE_MAX)
            throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " is in no block");
}

auto VertexPartition::single(int n) -> VertexPartition
{
    return VertexPartition(n, {iota_vertices(n)});
}

auto VertexPartition::block_of(Vertex v) const -> std::size_t
{
    if (v < 0 || v >= _n)
        throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " is not covered by the partition");
    return _block_of[static_cast<std::size_t>(v)];
}

auto index_vector(const VertexPartition & p, std::span<const Vertex> s) -> IndexVector
{
    IndexVector x(p.size(), 0);
    for (auto v : s)
        ++x[p.block_of(v)];
    return x;
}

auto RobustReport::robust() const -> std::vector<IndexVector>
{
    std::vector<IndexVector> out;
    for (auto & v : vectors)
        if (v.robust == Verdict::yes)
            out.push_back(v.vector);
    return out;
}

auto RobustReport::any_unknown() const -> bool
{
    return std::any_of(vectors.begin(), vectors.end(), [](auto & v) { return v.robust == Verdict::unknown; });
}

namespace {
    auto floor_times(const Rational & beta, int n) -> std::size_t
    {
        Rational x = beta * n;
        Integer q = x.get_num() / x.get_den();
        return q.get_ui();
    }

    void decide_exact(RobustVector & out, const std::vector<VertexSet> & family, int n, std::size_t threshold, std::uint64_t budget)
    {
        auto t = min_transversal(family, n, threshold, budget);
        if (t.verdict == Verdict::unknown) {
            out.robust = Verdict::unknown;
            out.value = t.value;
            return;
        }
        if (t.exact) {
            out.robust = Verdict::no;
            out.value = t.value;
            out.value_exact = true;
            out.witness = {t.witness};
            return;
        }
        out.robust = Verdict::yes;
        out.value = threshold + 1;
    }

    void decide_packing(RobustVector & out, const std::vector<VertexSet> & family, int n, std::size_t threshold, std::uint64_t budget)
    {
        auto p = max_disjoint_sets(family, n, threshold + 1, budget);
        out.value = p.sets.size();
        VertexSet union_of;
        for (auto i : p.sets) {
            out.witness.push_back(family[i]);
            union_of.insert(union_of.end(), family[i].begin(), family[i].end());
        }
        if (p.sets.size() > threshold)
            out.robust = Verdict::yes;
        else if (p.verdict == Verdict::yes && union_of.size() <= threshold)
            // A maximum packing is maximal, so its union meets every member.
            out.robust = Verdict::no;
        else
            out.robust = Verdict::unknown;
    }
}

auto robust_vectors(const KGraph & h, const VertexPartition & p, const Rational & beta, const RobustOptions & options)
    -> RobustReport
{
    if (p.n() != h.n())
        throw Error(ErrorKind::invalid_dimension, "partition and graph have different vertex counts");
    if (beta < 0)
        throw Error(ErrorKind::invalid_argument, "beta must be nonnegative");
    EnumerateOptions eo;
    eo.cap = options.cap;
    eo.workers = options.workers;
    auto sets = supporting_sets(enumerate_tk_copies(h, eo));

    std::map<IndexVector, std::vector<VertexSet>> families;
    for (auto & s : sets)
        families[index_vector(p, s)].push_back(s);

    RobustReport report;
    report.threshold = floor_times(beta, h.n());
    report.mode = options.mode;
    std::vector<const std::vector<VertexSet> *> jobs;
    for (auto & [vec, family] : families) {
        RobustVector rv;
        rv.vector = vec;
        rv.sets = family.size();
        report.vectors.push_back(std::move(rv));
        jobs.push_back(&family);
    }
    parallel_for(jobs.size(), options.workers, [&](std::size_t i) {
        if (options.mode == RobustMode::exact)
            decide_exact(report.vectors[i], *jobs[i], h.n(), report.threshold, options.budget);
        else
            decide_packing(report.vectors[i], *jobs[i], h.n(), report.threshold, options.budget);
    });
    return report;
}

namespace {
    void axpy(IntVector & row, const Integer & q, const IntVector & pivot)
    {
        for (std::size_t c = 0; c < row.size(); ++c)
            row[c] -= q * pivot[c];
    }

    auto floor_div(const Integer & a, const Integer & b) -> Integer
    {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
}

LatticeBasis::LatticeBasis(std::size_t dim, std::vector<IntVector> generators) :
    _dim(dim),
    _generators(std::move(generators))
{
    const std::size_t m = _generators.size();
    for (auto & g : _generators)
        if (g.size() != dim)
            throw Error(ErrorKind::invalid_dimension, "generator of length " + std::to_string(g.size()) + " in dimension " + std::to_string(dim));

    std::vector<IntVector> a = _generators;
    std::vector<IntVector> u(m, IntVector(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        u[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < m; ++col) {
        bool has_pivot = false;
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (a[i][col] != 0 && (p == m || abs(a[i][col]) < abs(a[p][col])))
                    p = i;
            if (p == m)
                break;
            has_pivot = true;
            std::swap(a[p], a[r]);
            std::swap(u[p], u[r]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a[i][col] == 0)
                    continue;
                Integer q = floor_div(a[i][col], a[r][col]);
                axpy(a[i], q, a[r]);
                axpy(u[i], q, u[r]);
                cleared &= a[i][col] == 0;
            }
            if (cleared)
                break;
        }
        if (! has_pivot)
            continue;
        if (a[r][col] < 0) {
            for (auto & x : a[r])
                x = -x;
            for (auto & x : u[r])
                x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(a[i][col], a[r][col]);
            axpy(a[i], q, a[r]);
            axpy(u[i], q, u[r]);
        }
        _pivots.push_back(col);
        ++r;
    }
    _hermite.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r));
    _transform.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(r));
}

auto LatticeBasis::of(std::size_t dim, std::span<const IndexVector> generators) -> LatticeBasis
{
    std::vector<IntVector> g;
    for (auto & v : generators)
        g.emplace_back(v.begin(), v.end());
    return LatticeBasis(dim, std::move(g));
}

auto LatticeBasis::express(const IntVector & v) const -> std::optional<IntVector>
{
    if (v.size() != _dim)
        throw Error(ErrorKind::invalid_dimension, "vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(_dim));
    IntVector rest = v;
    IntVector coefficients(_generators.size(), 0);
    for (std::size_t i = 0; i < _hermite.size(); ++i) {
        const auto & pivot = _hermite[i][_pivots[i]];
        if (! mpz_divisible_p(rest[_pivots[i]].get_mpz_t(), pivot.get_mpz_t()))
            return std::nullopt;
        Integer x = rest[_pivots[i]] / pivot;
        axpy(rest, x, _hermite[i]);
        for (std::size_t g = 0; g < coefficients.size(); ++g)
            coefficients[g] += x * _transform[i][g];
    }
    if (std::any_of(rest.begin(), rest.end(), [](auto & x) { return x != 0; }))
        return std::nullopt;
    return coefficients;
}

auto lattice_contains(const LatticeBasis & lattice, const IntVector & v) -> bool
{
    return lattice.express(v).has_value();
}

auto has_transferral(const KGraph & h, const VertexPartition & p, const Rational & beta, std::size_t i, std::size_t j,
    const RobustOptions & options) -> Transferral
{
    Transferral out;
    if (p.size() == 1) {
        out.verdict = Verdict::no;
        return out;
    }
    if (i == j || i >= p.size() || j >= p.size())
        throw Error(ErrorKind::invalid_argument, "transferral needs two distinct block indices below " + std::to_string(p.size()));
    out.target.assign(p.size(), 0);
    out.target[i] = 1;
    out.target[j] = -1;
    out.robust = robust_vectors(h, p, beta, options);
    auto robust = out.robust.robust();

    for (auto & s : robust)
        for (auto & t : robust) {
            bool match = true;
            for (std::size_t c = 0; c < s.size() && match; ++c)
                match = out.target[c] == s[c] - t[c];
            if (match) {
                out.pair = {s, t};
                out.verdict = Verdict::yes;
                return out;
            }
        }

    auto lattice = LatticeBasis::of(p.size(), robust);
    if (auto c = lattice.express(out.target)) {
        out.verdict = Verdict::yes;
        out.generators = robust;
        out.coefficients = std::move(*c);
        return out;
    }
    out.verdict = out.robust.any_unknown() ? Verdict::unknown : Verdict::no;
    return out;
}

namespace {
    /// Perfect tiling of H[set] mapped back to H's labels.
    auto tile_set(const KGraph & h, const VertexSet & set, std::uint64_t budget) -> std::pair<Verdict, Tiling>
    {
        const int s = 2 * h.k() - 1;
        if (static_cast<int>(set.size()) == s) {
            auto copy = supports_tk(h, set);
            return {copy ? Verdict::yes : Verdict::no, copy ? Tiling{{*copy}} : Tiling{}};
        }
        auto sub = induced(h, set);
        ExactOptions eo;
        eo.budget = budget;
        auto d = perfect_tiling(sub.graph, eo);
        Tiling t;
        if (d.tiling)
            for (auto & c : d.tiling->copies) {
                std::vector<Vertex> roles;
                for (auto v : c.roles())
                    roles.push_back(sub.relabel[static_cast<std::size_t>(v)]);
                t.copies.emplace_back(h.k(), std::move(roles));
            }
        std::sort(t.copies.begin(), t.copies.end());
        return {d.verdict, std::move(t)};
    }

    auto with_vertex(const VertexSet & s, Vertex v) -> VertexSet
    {
        VertexSet out = s;
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        return out;
    }

    void check_vertex(const KGraph & h, Vertex v)
    {
        if (v < 0 || v >= h.n())
            throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " out of range");
    }

    /// Calls fn(connector) for each connector in search order until fn returns false.
    /// Returns unknown when the budget ran out, yes when fn stopped the scan, no otherwise.
    template <typename Fn>
    auto scan_connectors(const KGraph & h, Vertex u, Vertex v, int t, std::span<const Vertex> forbidden,
        std::uint64_t budget, std::uint64_t & nodes, Fn && fn) -> Verdict
    {
        check_vertex(h, u);
        check_vertex(h, v);
        if (u == v)
            throw Error(ErrorKind::invalid_argument, "a connector needs two distinct vertices");
        if (t < 1)
            throw Error(ErrorKind::invalid_argument, "t must be positive");
        const int s = 2 * h.k() - 1;
        VertexSet blocked(forbidden.begin(), forbidden.end());
        blocked.push_back(u);
        blocked.push_back(v);
        std::sort(blocked.begin(), blocked.end());
        blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
        VertexSet pool = set_difference(iota_vertices(h.n()), blocked);

        Verdict verdict = Verdict::no;
        for (int q = 1; q <= t && verdict == Verdict::no; ++q) {
            for_each_combination(pool, s * q - 1, [&](std::span<const int> c) {
                if (++nodes > budget) {
                    verdict = Verdict::unknown;
                    return false;
                }
                VertexSet set(c.begin(), c.end());
                auto [vu, tu] = tile_set(h, with_vertex(set, u), budget);
                if (vu == Verdict::unknown) {
                    verdict = Verdict::unknown;
                    return false;
                }
                if (vu == Verdict::no)
                    return true;
                auto [vv, tv] = tile_set(h, with_vertex(set, v), budget);
                if (vv == Verdict::unknown) {
                    verdict = Verdict::unknown;
                    return false;
                }
                if (vv == Verdict::no)
                    return true;
                if (! fn(Connector{std::move(set), std::move(tu), std::move(tv)})) {
                    verdict = Verdict::yes;
                    return false;
                }
                return true;
            });
        }
        return verdict;
    }
}

auto find_connector(const KGraph & h, Vertex u, Vertex v, int t, std::span<const Vertex> forbidden, std::uint64_t budget)
    -> ConnectorSearch
{
    ConnectorSearch out;
    out.verdict = scan_connectors(h, u, v, t, forbidden, budget, out.nodes, [&](Connector c) {
        out.connector = std::move(c);
        return false;
    });
    return out;
}

auto all_connectors(const KGraph & h, Vertex u, Vertex v, int t, std::uint64_t budget) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    std::uint64_t nodes = 0;
    auto verdict = scan_connectors(h, u, v, t, {}, budget, nodes, [&](Connector c) {
        out.push_back(std::move(c.set));
        return true;
    });
    if (verdict == Verdict::unknown)
        throw BudgetExceeded("connector enumeration exceeded budget " + std::to_string(budget), out.size());
    return out;
}

auto reachable(const KGraph & h, Vertex u, Vertex v, int m, int t, ReachMode mode, std::uint64_t budget) -> Reachability
{
    if (m < 0)
        throw Error(ErrorKind::invalid_argument, "m must be nonnegative");
    Reachability out;
    out.mode = mode;

    if (mode == ReachMode::certificate) {
        VertexSet used;
        while (out.certificate.size() <= static_cast<std::size_t>(m)) {
            auto c = find_connector(h, u, v, t, used, budget - std::min(budget, out.nodes));
            out.nodes += c.nodes;
            if (c.verdict == Verdict::unknown) {
                out.verdict = Verdict::unknown;
                return out;
            }
            if (c.verdict == Verdict::no)
                break;
            used = set_union(used, c.connector->set);
            out.certificate.push_back(std::move(*c.connector));
        }
        if (out.certificate.size() > static_cast<std::size_t>(m)) {
            out.verdict = Verdict::yes;
            return out;
        }
        // The connectors found form a maximal disjoint family: their union meets every connector.
        if (used.size() <= static_cast<std::size_t>(m)) {
            out.verdict = Verdict::no;
            out.blocker = used;
        }
        else
            out.verdict = Verdict::unknown;
        out.certificate.clear();
        return out;
    }

    std::vector<VertexSet> family;
    try {
        family = all_connectors(h, u, v, t, budget);
    }
    catch (const BudgetExceeded &) {
        out.verdict = Verdict::unknown;
        out.nodes = budget;
        return out;
    }
    out.connectors = family.size();
    auto tau = min_transversal(family, h.n(), static_cast<std::size_t>(m), budget);
    out.nodes = tau.nodes;
    if (tau.verdict == Verdict::unknown)
        out.verdict = Verdict::unknown;
    else if (tau.exact) {
        out.verdict = Verdict::no;
        out.blocker = tau.witness;
    }
    else
        out.verdict = Verdict::yes;
    return out;
}

auto is_closed(const KGraph & h, std::span<const Vertex> u, int m, int t, ReachMode mode, std::uint64_t budget, unsigned workers)
    -> Closedness
{
    VertexSet set(u.begin(), u.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            pairs.emplace_back(set[i], set[j]);

    Closedness out;
    out.pairs = pairs.size();
    std::optional<std::pair<Vertex, Vertex>> first_unknown;
    auto consider = [&](std::size_t i, Verdict v) {
        if (v == Verdict::no) {
            out.verdict = Verdict::no;
            out.failing = pairs[i];
            return false;
        }
        if (v == Verdict::unknown && ! first_unknown)
            first_unknown = pairs[i];
        return true;
    };

    bool refuted = false;
    if (workers <= 1) {
        for (std::size_t i = 0; i < pairs.size() && ! refuted; ++i)
            refuted = ! consider(i, reachable(h, pairs[i].first, pairs[i].second, m, t, mode, budget).verdict);
    }
    else {
        std::vector<Verdict> verdicts(pairs.size());
        parallel_for(pairs.size(), workers, [&](std::size_t i) {
            verdicts[i] = reachable(h, pairs[i].first, pairs[i].second, m, t, mode, budget).verdict;
        });
        for (std::size_t i = 0; i < pairs.size() && ! refuted; ++i)
            refuted = ! consider(i, verdicts[i]);
    }
    if (! refuted && first_unknown) {
        out.verdict = Verdict::unknown;
        out.failing = first_unknown;
    }
    return out;
}

auto find_absorber(const KGraph & h, std::span<const Vertex> s, int t, std::span<const Vertex> forbidden, std::uint64_t budget)
    -> AbsorberSearch
{
    const int size = 2 * h.k() - 1;
    VertexSet target(s.begin(), s.end());
    std::sort(target.begin(), target.end());
    if (static_cast<int>(target.size()) != size || ! is_sorted_distinct(target))
        throw Error(ErrorKind::invalid_argument, "S must consist of exactly " + std::to_string(size) + " distinct vertices");
    for (auto v : target)
        check_vertex(h, v);
    if (t < 1)
        throw Error(ErrorKind::invalid_argument, "t must be positive");

    VertexSet blocked(forbidden.begin(), forbidden.end());
    blocked.insert(blocked.end(), target.begin(), target.end());
    std::sort(blocked.begin(), blocked.end());
    blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
    VertexSet pool = set_difference(iota_vertices(h.n()), blocked);

    AbsorberSearch out;
    out.verdict = Verdict::no;
    for (int q = 1; q <= size * t && out.verdict == Verdict::no; ++q) {
        if (q * size > static_cast<int>(pool.size()))
            break;
        for_each_combination(pool, q * size, [&](std::span<const int> c) {
            if (++out.nodes > budget) {
                out.verdict = Verdict::unknown;
                return false;
            }
            VertexSet set(c.begin(), c.end());
            auto [va, ta] = tile_set(h, set, budget);
            if (va != Verdict::yes) {
                if (va == Verdict::unknown)
                    out.verdict = Verdict::unknown;
                return va == Verdict::no;
            }
            auto [vs, ts] = tile_set(h, set_union(set, target), budget);
            if (vs != Verdict::yes) {
                if (vs == Verdict::unknown)
                    out.verdict = Verdict::unknown;
                return vs == Verdict::no;
            }
            out.absorber = Absorber{std::move(set), std::move(ta), std::move(ts)};
            out.verdict = Verdict::yes;
            return false;
        });
    }
    return out;
}

auto x_density(const KGraph & h, const VertexPartition & p, const IndexVector & x) -> Rational
{
    if (p.n() != h.n() || x.size() != p.size())
        throw Error(ErrorKind::invalid_dimension, "partition, graph and index vector disagree in size");
    int total = 0;
    for (auto xi : x) {
        if (xi < 0)
            throw Error(ErrorKind::invalid_edge_profile, "index vector has a negative entry");
        total += xi;
    }
    if (total != h.k())
        throw Error(ErrorKind::invalid_edge_profile, "index vector must sum to k");
    for (auto & e : h.edges())
        if (index_vector(p, e) != x)
            throw Error(ErrorKind::invalid_edge_profile, "an edge has a different index vector");
    Integer possible = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        possible *= binomial(static_cast<long>(p.blocks()[i].size()), x[i]);
    if (possible == 0)
        throw Error(ErrorKind::invalid_edge_profile, "no k-set has this index vector");
    return Rational(Integer(static_cast<unsigned long>(h.edge_count()))) / Rational(possible);
}

auto is_complete(const KGraph & h, const VertexPartition & p, const IndexVector & x, const Rational & eps) -> bool
{
    return x_density(h, p, x) >= 1 - eps;
}

auto monochromatic_fraction(const KGraph & h, const std::vector<int> & coloring) -> Monochromatic
{
    if (coloring.size() != h.edge_count())
        throw Error(ErrorKind::invalid_coloring, "need one colour per edge");
    if (h.edge_count() == 0)
        throw Error(ErrorKind::empty_graph, "monochromatic fraction of an edgeless graph");
    std::map<int, std::size_t> counts;
    for (auto c : coloring) {
        if (c < 0)
            throw Error(ErrorKind::invalid_coloring, "colours must be nonnegative");
        ++counts[c];
    }
    Monochromatic out;
    std::size_t best = 0;
    for (auto [c, count] : counts)
        if (count > best) {
            best = count;
            out.color = c;
        }
    out.fraction = Rational(static_cast<long>(best)) / static_cast<long>(h.edge_count());
    return out;
}

auto is_zeta_monochromatic(const KGraph & h, const std::vector<int> & coloring, const Rational & zeta) -> bool
{
    return monochromatic_fraction(h, coloring).fraction >= 1 - zeta;
}

}
