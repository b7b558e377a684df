#include "tktile/report.hpp"

namespace tktile {

auto to_json(const Rational & q) -> Json
{
    return to_pq_string(q);
}

auto to_json(const std::vector<Rational> & v) -> Json
{
    Json out = Json::array();
    for (auto & q : v)
        out.push_back(to_pq_string(q));
    return out;
}

auto to_json(const IntVector & v) -> Json
{
    Json out = Json::array();
    for (auto & z : v)
        out.push_back(z.get_str());
    return out;
}

auto to_json(const TkCopy & copy) -> Json
{
    Json edges = Json::array();
    for (auto & e : copy.edges())
        edges.push_back(e);
    return Json{{"vertices", copy.vertices()}, {"roles", copy.roles()}, {"edges", std::move(edges)}};
}

auto to_json(const Tiling & tiling) -> Json
{
    Json out = Json::array();
    for (auto & c : tiling.copies)
        out.push_back(to_json(c));
    return out;
}

auto to_json(const FractionalTiling & w) -> Json
{
    Json out = Json::array();
    for (auto & [copy, weight] : w.weights) {
        auto rec = to_json(copy);
        rec["weight"] = to_pq_string(weight);
        out.push_back(std::move(rec));
    }
    return out;
}

auto to_json(const FarkasCertificate & c) -> Json
{
    Rational total = 0;
    for (auto & q : c.a)
        total += q;
    return Json{{"a", to_json(c.a)}, {"total", to_pq_string(total)}};
}

auto to_json(const RobustVector & v) -> Json
{
    Json out{{"vector", v.vector}, {"robust", to_string(v.robust)}, {"sets", v.sets}, {"value", v.value},
        {"value_exact", v.value_exact}};
    out["witness"] = v.witness;
    return out;
}

auto to_json(const RobustReport & r) -> Json
{
    Json vectors = Json::array();
    for (auto & v : r.vectors)
        vectors.push_back(to_json(v));
    return Json{{"threshold", r.threshold}, {"mode", r.mode == RobustMode::exact ? "exact" : "packing"},
        {"vectors", std::move(vectors)}};
}

auto to_json(const Connector & c) -> Json
{
    return Json{{"set", c.set}, {"with_u", to_json(c.with_u)}, {"with_v", to_json(c.with_v)}};
}

auto to_json(const Absorber & a) -> Json
{
    return Json{{"set", a.set}, {"alone", to_json(a.alone)}, {"with_s", to_json(a.with_s)}};
}

auto to_json(const RainbowTiling & rt) -> Json
{
    return Json{{"tiling", to_json(rt.tiling)}, {"assignment", rt.assignment}};
}

auto to_json(const StageReport & s) -> Json
{
    Json diagnostics = Json::object();
    for (auto & [key, value] : s.diagnostics)
        diagnostics[key] = value;
    return Json{{"stage", s.stage}, {"ok", s.ok}, {"diagnostics", std::move(diagnostics)}};
}

}
