#include "tktile/fractional.hpp"

#include "tktile/simplex.hpp"

#include <algorithm>
#include <map>

namespace tktile {

auto vertex_weight(const FractionalTiling & w, Vertex u) -> Rational
{
    if (u < 0 || u >= w.n)
        throw Error(ErrorKind::invalid_vertex, "vertex " + std::to_string(u) + " out of range");
    Rational s = 0;
    for (auto & [copy, weight] : w.weights)
        if (std::binary_search(copy.vertices().begin(), copy.vertices().end(), u))
            s += weight;
    return s;
}

auto pair_weight(const FractionalTiling & w, Vertex u, Vertex v) -> Rational
{
    if (u < 0 || u >= w.n || v < 0 || v >= w.n)
        throw Error(ErrorKind::invalid_vertex, "vertex out of range");
    Rational s = 0;
    for (auto & [copy, weight] : w.weights) {
        auto & vs = copy.vertices();
        if (std::binary_search(vs.begin(), vs.end(), u) && std::binary_search(vs.begin(), vs.end(), v))
            s += weight;
    }
    return s;
}

auto is_perfect(const FractionalTiling & w) -> bool
{
    std::vector<Rational> load(static_cast<std::size_t>(w.n), Rational(0));
    for (auto & [copy, weight] : w.weights) {
        if (weight < 0)
            return false;
        for (auto v : copy.vertices())
            load[static_cast<std::size_t>(v)] += weight;
    }
    return std::all_of(load.begin(), load.end(), [](const Rational & x) { return x == 1; });
}

auto primitive_integer_vector(const std::vector<Rational> & v) -> std::vector<Rational>
{
    Integer l = 1, g = 0;
    for (auto & x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Rational> out;
    for (auto & x : v) {
        Rational y = x * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
        out.push_back(y);
    }
    if (g != 0)
        for (auto & x : out)
            x /= g;
    return out;
}

void for_each_supporting_set(const KGraph & h, const std::function<bool(const VertexSet &, const TkCopy &)> & fn)
{
    auto pool = iota_vertices(h.n());
    VertexSet set;
    for_each_combination(pool, 2 * h.k() - 1, [&](std::span<const int> s) {
        auto copy = supports_tk(h, s);
        if (! copy)
            return true;
        set.assign(s.begin(), s.end());
        return fn(set, *copy);
    });
}

namespace {
    struct Column {
        VertexSet set;
        TkCopy witness;
    };

    /// One column per supporting set; the witness is its least canonical copy.
    auto supporting_columns(const KGraph & h, const FractionalOptions & options,
        const std::function<bool(const VertexSet &)> & keep = {}) -> std::vector<Column>
    {
        EnumerateOptions eo;
        eo.cap = options.cap;
        eo.workers = options.workers;
        auto copies = enumerate_tk_copies(h, eo);
        std::vector<Column> cols;
        for (auto & c : copies) {
            if (! cols.empty() && cols.back().set == c.vertices())
                continue;
            if (keep && ! keep(c.vertices()))
                continue;
            cols.push_back({c.vertices(), c});
        }
        return cols;
    }

    auto lp_column(const VertexSet & set) -> LinearProgram::Column
    {
        LinearProgram::Column col;
        for (auto v : set)
            col.emplace_back(v, Rational(1));
        return col;
    }

    auto tiling_from(int n, const std::vector<Column> & cols, const std::vector<Rational> & x) -> FractionalTiling
    {
        FractionalTiling w;
        w.n = n;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (x[j] != 0)
                w.weights.emplace_back(cols[j].witness, x[j]);
        std::sort(w.weights.begin(), w.weights.end(), [](auto & a, auto & b) { return a.first < b.first; });
        return w;
    }

    auto certificate_from(const std::vector<Rational> & y) -> FarkasCertificate
    {
        std::vector<Rational> a;
        for (auto & v : y)
            a.push_back(-v);
        return {primitive_integer_vector(a)};
    }

    auto solve_cover(const KGraph & h, const std::vector<Column> & cols) -> FractionalOutcome
    {
        LinearProgram lp;
        lp.rows = h.n();
        lp.b.assign(static_cast<std::size_t>(h.n()), Rational(1));
        for (auto & c : cols)
            lp.add_column(lp_column(c.set), Rational(0));
        auto r = solve_lp(lp);
        FractionalOutcome out;
        out.columns = cols.size();
        if (r.status == LpStatus::infeasible)
            out.certificate = certificate_from(r.y);
        else
            out.tiling = tiling_from(h.n(), cols, r.x);
        return out;
    }

    /// Restricted master over a growing column pool; pricing streams over all
    /// supporting sets and adds the one with the most negative phase-1 reduced cost.
    auto solve_cover_generated(const KGraph & h, const std::function<bool(const VertexSet &)> & keep) -> FractionalOutcome
    {
        std::vector<Column> pool;
        while (true) {
            LinearProgram lp;
            lp.rows = h.n();
            lp.b.assign(static_cast<std::size_t>(h.n()), Rational(1));
            for (auto & c : pool)
                lp.add_column(lp_column(c.set), Rational(0));
            auto r = solve_lp(lp);
            FractionalOutcome out;
            out.columns = pool.size();
            if (r.status != LpStatus::infeasible) {
                out.tiling = tiling_from(h.n(), pool, r.x);
                return out;
            }
            std::optional<Column> best;
            Rational best_value = 0;
            for_each_supporting_set(h, [&](const VertexSet & s, const TkCopy & copy) {
                if (keep && ! keep(s))
                    return true;
                Rational v = 0;
                for (auto u : s)
                    v += r.y[static_cast<std::size_t>(u)];
                if (v > best_value) {
                    best_value = v;
                    best = Column{s, copy};
                }
                return true;
            });
            if (! best) {
                out.certificate = certificate_from(r.y);
                return out;
            }
            pool.push_back(std::move(*best));
        }
    }

    auto avoids(const PairGraph & b, const VertexSet & s) -> bool
    {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (b.has_edge(std::array{s[i], s[j]}))
                    return false;
        return true;
    }
}

auto perfect_fractional_tiling(const KGraph & h, const FractionalOptions & options) -> FractionalOutcome
{
    if (options.column_generation)
        return solve_cover_generated(h, {});
    return solve_cover(h, supporting_columns(h, options));
}

auto b_avoiding_fractional_tiling(const KGraph & h, const PairGraph & b, const FractionalOptions & options) -> FractionalOutcome
{
    if (b.k() != 2 || b.n() != h.n())
        throw Error(ErrorKind::invalid_dimension, "B must be a pair graph on V(H)");
    auto keep = [&](const VertexSet & s) { return avoids(b, s); };
    if (options.column_generation)
        return solve_cover_generated(h, keep);
    return solve_cover(h, supporting_columns(h, options, keep));
}

auto verify_certificate(const KGraph & h, const FarkasCertificate & cert, const FractionalOptions & options) -> CertificateCheck
{
    if (cert.a.size() != static_cast<std::size_t>(h.n()))
        throw Error(ErrorKind::invalid_dimension,
            "certificate has " + std::to_string(cert.a.size()) + " entries for " + std::to_string(h.n()) + " vertices");
    CertificateCheck check;
    for (auto & x : cert.a)
        check.total += x;
    if (check.total >= 0)
        return check;
    EnumerateOptions eo;
    eo.cap = options.cap;
    eo.workers = options.workers;
    for (auto & copy : enumerate_tk_copies(h, eo)) {
        Rational s = 0;
        for (auto v : copy.vertices())
            s += cert.a[static_cast<std::size_t>(v)];
        if (s < 0) {
            check.violating_copy = copy;
            return check;
        }
    }
    check.valid = true;
    return check;
}

auto min_max_pair_weight(const KGraph & h, const FractionalOptions & options) -> MinMaxPairWeight
{
    MinMaxPairWeight out;
    auto cols = supporting_columns(h, options);
    auto feasible = solve_cover(h, cols);
    if (feasible.certificate) {
        out.certificate = feasible.certificate;
        return out;
    }

    std::map<std::pair<Vertex, Vertex>, int> pair_row;
    for (auto & c : cols)
        for (std::size_t i = 0; i < c.set.size(); ++i)
            for (std::size_t j = i + 1; j < c.set.size(); ++j)
                pair_row.emplace(std::pair{c.set[i], c.set[j]}, 0);
    int row = h.n();
    for (auto & [pair, r] : pair_row)
        r = row++;

    LinearProgram lp;
    lp.rows = row;
    lp.b.assign(static_cast<std::size_t>(h.n()), Rational(1));
    lp.b.resize(static_cast<std::size_t>(row), Rational(0));
    for (auto & c : cols) {
        auto col = lp_column(c.set);
        for (std::size_t i = 0; i < c.set.size(); ++i)
            for (std::size_t j = i + 1; j < c.set.size(); ++j)
                col.emplace_back(pair_row.at({c.set[i], c.set[j]}), Rational(1));
        lp.add_column(std::move(col), Rational(0));
    }
    LinearProgram::Column bound;
    for (auto & [pair, r] : pair_row)
        bound.emplace_back(r, Rational(-1));
    std::size_t w_index = lp.add_column(std::move(bound), Rational(1));
    for (auto & [pair, r] : pair_row)
        lp.add_column({{r, Rational(1)}}, Rational(0));

    auto r = solve_lp(lp);
    if (r.status != LpStatus::optimal)
        throw Error(ErrorKind::invalid_argument, "pair-weight LP did not reach an optimum");
    out.optimum = r.x[w_index];
    r.x.resize(cols.size());
    out.tiling = tiling_from(h.n(), cols, r.x);
    return out;
}

auto fractional_packing_number(const KGraph & h, const FractionalOptions & options) -> PackingValue
{
    auto cols = supporting_columns(h, options);
    LinearProgram lp;
    lp.rows = h.n();
    lp.b.assign(static_cast<std::size_t>(h.n()), Rational(1));
    for (auto & c : cols)
        lp.add_column(lp_column(c.set), Rational(-1));
    for (int v = 0; v < h.n(); ++v)
        lp.add_column({{v, Rational(1)}}, Rational(0));
    auto r = solve_lp(lp);
    if (r.status != LpStatus::optimal)
        throw Error(ErrorKind::invalid_argument, "packing LP did not reach an optimum");
    r.x.resize(cols.size());
    return {-r.objective, tiling_from(h.n(), cols, r.x)};
}

}
