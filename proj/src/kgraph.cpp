#include "tktile/kgraph.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace tktile {

namespace {
    constexpr std::uint64_t bitmap_limit = std::uint64_t{1} << 26;
    constexpr std::uint64_t index_limit = std::uint64_t{1} << 25;

    auto sorted_copy(std::span<const Vertex> s) -> std::vector<Vertex>
    {
        std::vector<Vertex> v(s.begin(), s.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    /// Runs body(w) for w in [0, workers), in threads when workers > 1.
    template <typename Fn>
    void run_workers(unsigned workers, Fn && body)
    {
        if (workers <= 1) {
            body(0u);
            return;
        }
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    body(w);
                }
                catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto & t : pool)
            t.join();
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);
    }
}

struct KGraph::Index {
    std::vector<std::vector<Vertex>> neighborhoods;
    std::vector<std::size_t> degrees;
};

struct KGraph::LazyIndex {
    std::once_flag once;
    std::unique_ptr<Index> index;
};

KGraph::KGraph(int n, int k, std::vector<Edge> edges, Duplicates duplicates) :
    _n(n), _k(k), _edges(std::move(edges)), _lazy(std::make_shared<LazyIndex>())
{
    if (k < 2)
        throw Error(ErrorKind::invalid_uniformity, "uniformity must be at least 2, got " + std::to_string(k));
    if (n < 0)
        throw Error(ErrorKind::invalid_argument, "vertex count must be nonnegative");
    for (auto & e : _edges) {
        if (static_cast<int>(e.size()) != k)
            throw Error(ErrorKind::invalid_arity, "edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k) + "-graph");
        std::sort(e.begin(), e.end());
        if (e.front() < 0 || e.back() >= n)
            throw Error(ErrorKind::invalid_vertex, "edge vertex out of range 0.." + std::to_string(n - 1));
        if (! is_sorted_distinct(e))
            throw Error(ErrorKind::invalid_arity, "edge with a repeated vertex");
    }
    std::sort(_edges.begin(), _edges.end());
    auto last = std::unique(_edges.begin(), _edges.end());
    if (last != _edges.end() && duplicates == Duplicates::reject)
        throw Error(ErrorKind::parse_error, "duplicate edge");
    _edges.erase(last, _edges.end());

    _binomials = BinomialTable(n, k);
    std::uint64_t total = _binomials(n, k);
    if (total == std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorKind::guard_exceeded, "C(n,k) does not fit in 64 bits");
    if (total <= bitmap_limit) {
        _bitmap = true;
        _edge_bits.assign(static_cast<std::size_t>(total / 64 + 1), 0);
        for (auto & e : _edges) {
            auto r = rank_of(e);
            _edge_bits[r / 64] |= std::uint64_t{1} << (r % 64);
        }
    }
    else {
        _edge_ranks.reserve(_edges.size());
        for (auto & e : _edges)
            _edge_ranks.push_back(rank_of(e));
        std::sort(_edge_ranks.begin(), _edge_ranks.end());
    }
}

auto KGraph::complete(int n, int k) -> KGraph
{
    std::vector<Edge> edges;
    auto pool = iota_vertices(n);
    for_each_combination(pool, k, [&](std::span<const int> c) {
        edges.emplace_back(c.begin(), c.end());
        return true;
    });
    return KGraph(n, k, std::move(edges));
}

auto KGraph::has_edge(std::span<const Vertex> e) const -> bool
{
    if (static_cast<int>(e.size()) != _k)
        return false;
    std::vector<Vertex> local;
    if (! is_sorted_distinct(e)) {
        local = sorted_copy(e);
        if (! is_sorted_distinct(local))
            return false;
        e = local;
    }
    if (e.front() < 0 || e.back() >= _n)
        return false;
    auto r = rank_of(e);
    if (_bitmap)
        return (_edge_bits[r / 64] >> (r % 64)) & 1u;
    return std::binary_search(_edge_ranks.begin(), _edge_ranks.end(), r);
}

void KGraph::check_set(std::span<const Vertex> s, std::size_t expected_size) const
{
    if (s.size() != expected_size)
        throw Error(ErrorKind::invalid_arity, "expected a set of size " + std::to_string(expected_size) + ", got " + std::to_string(s.size()));
    for (auto v : s)
        if (v < 0 || v >= _n)
            throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(_n - 1));
}

auto KGraph::index() const -> const Index &
{
    std::call_once(_lazy->once, [this] {
        auto idx = std::make_unique<Index>();
        std::uint64_t sets = _binomials(_n, _k - 1);
        if (sets > index_limit)
            throw Error(ErrorKind::guard_exceeded, "codegree index would hold " + std::to_string(sets) + " sets");
        idx->neighborhoods.resize(static_cast<std::size_t>(sets));
        idx->degrees.assign(static_cast<std::size_t>(_n), 0);
        std::vector<Vertex> rest(static_cast<std::size_t>(_k - 1));
        for (auto & e : _edges) {
            for (int drop = 0; drop < _k; ++drop) {
                int j = 0;
                for (int i = 0; i < _k; ++i)
                    if (i != drop)
                        rest[static_cast<std::size_t>(j++)] = e[static_cast<std::size_t>(i)];
                idx->neighborhoods[rank_of(rest)].push_back(e[static_cast<std::size_t>(drop)]);
                ++idx->degrees[static_cast<std::size_t>(e[static_cast<std::size_t>(drop)])];
            }
        }
        for (auto & nb : idx->neighborhoods)
            std::sort(nb.begin(), nb.end());
        _lazy->index = std::move(idx);
    });
    return *_lazy->index;
}

auto KGraph::neighborhood(std::span<const Vertex> s) const -> const std::vector<Vertex> &
{
    check_set(s, static_cast<std::size_t>(_k - 1));
    if (is_sorted_distinct(s))
        return index().neighborhoods[rank_of(s)];
    auto local = sorted_copy(s);
    if (! is_sorted_distinct(local))
        throw Error(ErrorKind::invalid_arity, "repeated vertex in a (k-1)-set");
    return index().neighborhoods[rank_of(local)];
}

auto KGraph::degree(Vertex v) const -> std::size_t
{
    if (v < 0 || v >= _n)
        throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " out of range");
    return index().degrees[static_cast<std::size_t>(v)];
}

auto min_codegree(const KGraph & h, unsigned workers) -> CodegreeMinimum
{
    const int n = h.n(), r = h.k() - 1;
    if (n < r)
        throw Error(ErrorKind::too_few_vertices, "need at least k-1 vertices");
    workers = std::max(1u, workers);
    auto pool = iota_vertices(n);
    std::vector<std::optional<CodegreeMinimum>> partial(workers);

    // Worker w handles the combinations whose first vertex is congruent to w.
    run_workers(workers, [&](unsigned w) {
        std::optional<CodegreeMinimum> best;
        std::vector<Vertex> s(static_cast<std::size_t>(r));
        for (int first = static_cast<int>(w); first + r <= n; first += static_cast<int>(workers)) {
            s[0] = first;
            std::span<const int> rest(pool.data() + first + 1, pool.size() - static_cast<std::size_t>(first) - 1);
            for_each_combination(rest, r - 1, [&](std::span<const int> c) {
                std::copy(c.begin(), c.end(), s.begin() + 1);
                auto d = h.codegree(s);
                if (! best || d < best->value)
                    best = CodegreeMinimum{d, s};
                return true;
            });
        }
        partial[w] = std::move(best);
    });

    std::optional<CodegreeMinimum> best;
    for (auto & p : partial)
        if (p && (! best || p->value < best->value || (p->value == best->value && p->witness < best->witness)))
            best = std::move(p);
    if (! best)
        return CodegreeMinimum{0, {}};
    return *best;
}

auto density(const KGraph & h) -> DensityValue
{
    if (h.n() < h.k())
        throw Error(ErrorKind::too_few_vertices, "density needs n >= k");
    return DensityValue{Integer(static_cast<unsigned long>(h.edge_count())), binomial(h.n(), h.k())};
}

namespace {
    auto validated_subset(const KGraph & h, std::span<const Vertex> s) -> VertexSet
    {
        VertexSet sorted = sorted_copy(s);
        for (auto v : sorted)
            if (v < 0 || v >= h.n())
                throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(v) + " out of range");
        if (! is_sorted_distinct(sorted))
            throw Error(ErrorKind::invalid_argument, "vertex set has repeated entries");
        return sorted;
    }
}

auto induced(const KGraph & h, std::span<const Vertex> s) -> InducedSubgraph
{
    VertexSet members = validated_subset(h, s);
    std::vector<int> position(static_cast<std::size_t>(h.n()), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        position[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto & e : h.edges()) {
        Edge mapped;
        mapped.reserve(e.size());
        for (auto v : e) {
            int p = position[static_cast<std::size_t>(v)];
            if (p < 0)
                break;
            mapped.push_back(p);
        }
        if (mapped.size() == e.size())
            edges.push_back(std::move(mapped));
    }
    return InducedSubgraph{KGraph(static_cast<int>(members.size()), h.k(), std::move(edges)), std::move(members)};
}

auto induced_edge_count(const KGraph & h, std::span<const Vertex> s) -> std::size_t
{
    VertexSet members = validated_subset(h, s);
    std::vector<char> in(static_cast<std::size_t>(h.n()), 0);
    for (auto v : members)
        in[static_cast<std::size_t>(v)] = 1;
    std::size_t count = 0;
    for (auto & e : h.edges())
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[static_cast<std::size_t>(v)]; }))
            ++count;
    return count;
}

auto gamma_extremal_size(int n, int k) -> int
{
    return ((2 * k - 3) * n) / (2 * k - 1);
}

namespace {
    /// d(H[S]) <= gamma with d = e / C(|S|, k); sets too small for an edge count as density 0.
    auto density_at_most(std::size_t edges, int size, int k, const Rational & gamma) -> bool
    {
        Integer total = binomial(size, k);
        if (total == 0)
            return true;
        return Rational(Integer(static_cast<unsigned long>(edges))) <= gamma * Rational(total);
    }

    auto heuristic_peel(const KGraph & h, const Rational & gamma, int target) -> ExtremalResult
    {
        const int n = h.n();
        std::vector<char> alive(static_cast<std::size_t>(n), 1);
        std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
        std::vector<char> edge_alive(h.edge_count(), 1);
        for (auto & e : h.edges())
            for (auto v : e)
                ++deg[static_cast<std::size_t>(v)];
        std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < h.edge_count(); ++i)
            for (auto v : h.edges()[i])
                incident[static_cast<std::size_t>(v)].push_back(i);
        std::size_t live_edges = h.edge_count();
        for (int remaining = n; remaining > target; --remaining) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (alive[static_cast<std::size_t>(v)] && (pick < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pick)]))
                    pick = v;
            alive[static_cast<std::size_t>(pick)] = 0;
            for (auto ei : incident[static_cast<std::size_t>(pick)]) {
                if (! edge_alive[ei])
                    continue;
                edge_alive[ei] = 0;
                --live_edges;
                for (auto v : h.edges()[ei])
                    --deg[static_cast<std::size_t>(v)];
            }
        }
        ExtremalResult result;
        result.mode = ExtremalMode::heuristic;
        result.target_size = target;
        if (density_at_most(live_edges, target, h.k(), gamma)) {
            VertexSet witness;
            for (int v = 0; v < n; ++v)
                if (alive[static_cast<std::size_t>(v)])
                    witness.push_back(v);
            result.verdict = Verdict::yes;
            result.witness = std::move(witness);
        }
        else
            result.verdict = Verdict::unknown;
        return result;
    }
}

auto is_gamma_extremal(const KGraph & h, const Rational & gamma, const ExtremalOptions & options) -> ExtremalResult
{
    const int n = h.n(), k = h.k();
    int target = options.size_override.value_or(gamma_extremal_size(n, k));
    if (target < 0 || target > n)
        throw Error(ErrorKind::invalid_argument, "extremal set size " + std::to_string(target) + " outside 0.." + std::to_string(n));
    if (gamma < 0)
        throw Error(ErrorKind::invalid_argument, "gamma must be nonnegative");
    if (options.mode == ExtremalMode::heuristic)
        return heuristic_peel(h, gamma, target);

    // Edges as flat arrays for the inner loop.
    std::vector<Vertex> flat;
    flat.reserve(h.edge_count() * static_cast<std::size_t>(k));
    for (auto & e : h.edges())
        flat.insert(flat.end(), e.begin(), e.end());
    Integer total = binomial(target, k);
    // Largest admissible edge count: floor(gamma * C(target, k)).
    Rational limit_q = gamma * Rational(total);
    Integer limit = limit_q.get_num() / limit_q.get_den();

    const unsigned workers = std::max(1u, options.workers);
    auto pool = iota_vertices(n);
    std::atomic<std::uint64_t> examined{0};
    std::atomic<bool> exhausted{false};
    std::vector<std::optional<VertexSet>> found(workers);

    if (target == 0) {
        ExtremalResult r;
        r.target_size = 0;
        r.verdict = Verdict::yes;
        r.witness = VertexSet{};
        return r;
    }

    run_workers(workers, [&](unsigned w) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        VertexSet s(static_cast<std::size_t>(target));
        for (int first = static_cast<int>(w); first + target <= n && ! found[w]; first += static_cast<int>(workers)) {
            s[0] = first;
            std::span<const int> rest(pool.data() + first + 1, pool.size() - static_cast<std::size_t>(first) - 1);
            for_each_combination(rest, target - 1, [&](std::span<const int> c) {
                if (examined.fetch_add(1) >= options.budget) {
                    exhausted = true;
                    return false;
                }
                std::copy(c.begin(), c.end(), s.begin() + 1);
                for (auto v : s)
                    in[static_cast<std::size_t>(v)] = 1;
                std::size_t count = 0;
                for (std::size_t i = 0; i < flat.size(); i += static_cast<std::size_t>(k)) {
                    bool inside = true;
                    for (int j = 0; j < k && inside; ++j)
                        inside = in[static_cast<std::size_t>(flat[i + static_cast<std::size_t>(j)])];
                    count += inside;
                }
                for (auto v : s)
                    in[static_cast<std::size_t>(v)] = 0;
                if (Integer(static_cast<unsigned long>(count)) <= limit) {
                    found[w] = s;
                    return false;
                }
                return true;
            });
            if (exhausted)
                break;
        }
    });

    ExtremalResult result;
    result.target_size = target;
    for (auto & f : found)
        if (f && (! result.witness || *f < *result.witness))
            result.witness = f;
    if (result.witness)
        result.verdict = Verdict::yes;
    else if (exhausted)
        throw BudgetExceeded("gamma-extremal exact search", examined.load());
    else
        result.verdict = Verdict::no;
    return result;
}

}
