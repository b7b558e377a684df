#include "tktile/validate.hpp"

#include <algorithm>

namespace tktile {

namespace {
    auto show(std::span<const Vertex> s) -> std::string
    {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i)
            out += (i ? "," : "") + std::to_string(s[i]);
        return out + "}";
    }
}

auto validate_copy(const KGraph & h, const TkCopy & copy) -> Check
{
    const int k = h.k();
    if (copy.k() != k)
        return Check::fail("copy uniformity differs from host");
    const auto & v = copy.vertices();
    if (static_cast<int>(v.size()) != 2 * k - 1)
        return Check::fail("copy has the wrong number of vertices");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= h.n())
            return Check::fail("copy vertex out of range");
        if (i && v[i] == v[i - 1])
            return Check::fail("copy vertices repeat");
    }
    auto e = copy.edges();
    for (auto & edge : e) {
        if (static_cast<int>(edge.size()) != k)
            return Check::fail("copy edge has the wrong size");
        if (! h.has_edge(edge))
            return Check::fail("edge " + show(edge) + " is not in the host");
    }
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2])
        return Check::fail("copy edges are not distinct");

    auto shared = [](const Edge & a, const Edge & b) {
        std::size_t c = 0;
        for (auto x : a)
            c += std::count(b.begin(), b.end(), x);
        return c;
    };
    if (shared(e[0], e[1]) != static_cast<std::size_t>(k - 1))
        return Check::fail("base edges must share exactly k-1 vertices");
    Edge base;
    for (auto x : e[0])
        if (std::count(e[1].begin(), e[1].end(), x))
            base.push_back(x);
    for (auto x : base)
        if (std::count(e[2].begin(), e[2].end(), x))
            return Check::fail("third edge meets the base");
    for (auto & side : {e[0], e[1]})
        for (auto x : side)
            if (! std::count(base.begin(), base.end(), x) && ! std::count(e[2].begin(), e[2].end(), x))
                return Check::fail("apex " + std::to_string(x) + " missing from the third edge");
    return Check::pass();
}

auto validate_tiling(const KGraph & h, const Tiling & tiling, bool perfect) -> Check
{
    std::vector<int> used(static_cast<std::size_t>(h.n()), 0);
    for (auto & c : tiling.copies) {
        if (auto r = validate_copy(h, c); ! r)
            return r;
        for (auto v : c.vertices())
            if (used[static_cast<std::size_t>(v)]++)
                return Check::fail("vertex " + std::to_string(v) + " is covered twice");
    }
    if (perfect)
        for (int v = 0; v < h.n(); ++v)
            if (! used[static_cast<std::size_t>(v)])
                return Check::fail("vertex " + std::to_string(v) + " is uncovered");
    return Check::pass();
}

auto validate_fractional_tiling(const KGraph & h, const FractionalTiling & w, bool perfect) -> Check
{
    if (w.n != h.n())
        return Check::fail("fractional tiling is for a different vertex count");
    std::vector<Rational> load(static_cast<std::size_t>(h.n()), Rational(0));
    for (auto & [copy, weight] : w.weights) {
        if (auto r = validate_copy(h, copy); ! r)
            return r;
        if (weight < 0)
            return Check::fail("negative copy weight");
        for (auto v : copy.vertices())
            load[static_cast<std::size_t>(v)] += weight;
    }
    for (int v = 0; v < h.n(); ++v) {
        auto & x = load[static_cast<std::size_t>(v)];
        if (x > 1)
            return Check::fail("vertex " + std::to_string(v) + " has load " + to_pq_string(x));
        if (perfect && x != 1)
            return Check::fail("vertex " + std::to_string(v) + " has load " + to_pq_string(x) + ", not 1");
    }
    return Check::pass();
}

auto validate_perfect_matching(const KGraph & j, const std::vector<VertexSet> & classes, const std::vector<Edge> & matching) -> Check
{
    std::vector<int> cls(static_cast<std::size_t>(j.n()), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto v : classes[c]) {
            if (v < 0 || v >= j.n())
                return Check::fail("class vertex out of range");
            cls[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    std::vector<int> used(static_cast<std::size_t>(j.n()), 0);
    for (auto & e : matching) {
        if (! j.has_edge(e))
            return Check::fail("matching edge " + show(e) + " not in J");
        std::vector<int> seen;
        for (auto v : e) {
            if (used[static_cast<std::size_t>(v)]++)
                return Check::fail("vertex " + std::to_string(v) + " matched twice");
            seen.push_back(cls[static_cast<std::size_t>(v)]);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() || (! seen.empty() && seen.front() < 0))
            return Check::fail("matching edge " + show(e) + " is not transversal");
    }
    for (int v = 0; v < j.n(); ++v)
        if (! used[static_cast<std::size_t>(v)])
            return Check::fail("vertex " + std::to_string(v) + " unmatched");
    return Check::pass();
}

auto validate_set_tiling(const KGraph & h, std::span<const Vertex> set, const Tiling & tiling) -> Check
{
    std::vector<int> want(static_cast<std::size_t>(h.n()), 0);
    for (auto v : set) {
        if (v < 0 || v >= h.n())
            return Check::fail("vertex " + std::to_string(v) + " out of range");
        if (want[static_cast<std::size_t>(v)]++)
            return Check::fail("vertex " + std::to_string(v) + " listed twice");
    }
    for (auto & c : tiling.copies) {
        if (auto r = validate_copy(h, c); ! r)
            return r;
        for (auto v : c.vertices()) {
            auto & slot = want[static_cast<std::size_t>(v)];
            if (slot != 1)
                return Check::fail("vertex " + std::to_string(v) + (slot == 0 ? " lies outside the set" : " is covered twice"));
            slot = 2;
        }
    }
    for (auto v : set)
        if (want[static_cast<std::size_t>(v)] != 2)
            return Check::fail("vertex " + std::to_string(v) + " is uncovered");
    return Check::pass();
}

namespace {
    auto avoids(std::span<const Vertex> set, std::span<const Vertex> other) -> bool
    {
        for (auto v : set)
            if (std::find(other.begin(), other.end(), v) != other.end())
                return false;
        return true;
    }

    auto plus(std::span<const Vertex> set, std::span<const Vertex> extra) -> VertexSet
    {
        VertexSet out(set.begin(), set.end());
        out.insert(out.end(), extra.begin(), extra.end());
        return out;
    }
}

auto validate_connector(const KGraph & h, Vertex u, Vertex v, int t, const Connector & c, std::span<const Vertex> forbidden) -> Check
{
    const int s = 2 * h.k() - 1;
    if (static_cast<int>(c.set.size()) > s * t - 1)
        return Check::fail("connector has more than st-1 vertices");
    const Vertex ends[] = {u, v};
    if (! avoids(c.set, ends))
        return Check::fail("connector contains u or v");
    if (! avoids(c.set, forbidden))
        return Check::fail("connector uses a forbidden vertex");
    const Vertex just_u[] = {u}, just_v[] = {v};
    if (auto r = validate_set_tiling(h, plus(c.set, just_u), c.with_u); ! r)
        return Check::fail("tiling with u: " + r.reason);
    if (auto r = validate_set_tiling(h, plus(c.set, just_v), c.with_v); ! r)
        return Check::fail("tiling with v: " + r.reason);
    return Check::pass();
}

auto validate_absorber(const KGraph & h, std::span<const Vertex> s, int t, const Absorber & a, std::span<const Vertex> forbidden) -> Check
{
    const std::size_t size = s.size();
    if (a.set.empty())
        return Check::fail("absorber is empty");
    if (a.set.size() > size * size * static_cast<std::size_t>(t))
        return Check::fail("absorber has more than s^2 t vertices");
    if (! avoids(a.set, s))
        return Check::fail("absorber meets S");
    if (! avoids(a.set, forbidden))
        return Check::fail("absorber uses a forbidden vertex");
    if (auto r = validate_set_tiling(h, a.set, a.alone); ! r)
        return Check::fail("tiling of the absorber: " + r.reason);
    if (auto r = validate_set_tiling(h, plus(a.set, s), a.with_s); ! r)
        return Check::fail("tiling with S: " + r.reason);
    return Check::pass();
}

auto validate_rainbow_tiling(const GraphFamily & family, const RainbowTiling & rt) -> Check
{
    if (auto r = validate_tiling(family.union_graph(), rt.tiling, true); ! r)
        return r;
    if (rt.assignment.size() != 3 * rt.tiling.copies.size() || rt.assignment.size() != family.size())
        return Check::fail("assignment must give one host per edge slot and use every host");
    std::vector<int> used(family.size(), 0);
    for (std::size_t c = 0; c < rt.tiling.copies.size(); ++c) {
        auto edges = rt.tiling.copies[c].edges();
        for (std::size_t j = 0; j < 3; ++j) {
            int host = rt.assignment[3 * c + j];
            if (host < 0 || static_cast<std::size_t>(host) >= family.size())
                return Check::fail("host index out of range");
            if (used[static_cast<std::size_t>(host)]++)
                return Check::fail("host " + std::to_string(host) + " is used twice");
            if (! family.host(static_cast<std::size_t>(host)).has_edge(edges[j]))
                return Check::fail("edge " + show(edges[j]) + " is not in host " + std::to_string(host));
        }
    }
    return Check::pass();
}

auto validate_color_covering(const KGraph & pattern, const KGraph & h1, const KGraph & h2, const ColorCovering & c) -> Check
{
    if (c.map.size() != static_cast<std::size_t>(pattern.n()))
        return Check::fail("map must cover every pattern vertex");
    if (c.designated >= pattern.edge_count())
        return Check::fail("designated edge out of range");
    std::vector<int> hit(static_cast<std::size_t>(h1.n()), 0);
    for (auto v : c.map) {
        if (v < 0 || v >= h1.n())
            return Check::fail("image out of range");
        if (hit[static_cast<std::size_t>(v)]++)
            return Check::fail("map is not injective");
    }
    for (std::size_t e = 0; e < pattern.edge_count(); ++e) {
        Edge img;
        for (auto v : pattern.edges()[e])
            img.push_back(c.map[static_cast<std::size_t>(v)]);
        std::sort(img.begin(), img.end());
        const KGraph & host = e == c.designated ? h1 : h2;
        if (! host.has_edge(img))
            return Check::fail("image " + show(img) + " missing from H_" + (e == c.designated ? "1" : "2"));
    }
    return Check::pass();
}

}
