#include "tktile/cli.hpp"
#include "tktile/constructions.hpp"
#include "tktile/io.hpp"
#include "tktile/report.hpp"
#include "tktile/validate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace tktile;

namespace {
    // Results cross the boundary as the same JSON the CLI emits.
    auto to_python(const Json & j) -> py::object
    {
        return py::module_::import("json").attr("loads")(j.dump());
    }

    auto verdict_json(Verdict v) -> Json { return std::string(to_string(v)); }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact finite-instance tools for generalised triangle tilings";
    m.attr("__version__") = std::string(tool_version);

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<KGraph>(m, "KGraph")
        .def(py::init([](int n, int k, std::vector<Edge> edges) {
            for (auto & e : edges)
                std::sort(e.begin(), e.end());
            return KGraph(n, k, std::move(edges));
        }),
            py::arg("n"), py::arg("k"), py::arg("edges"))
        .def_static("complete", &KGraph::complete, py::arg("n"), py::arg("k"))
        .def_property_readonly("n", &KGraph::n)
        .def_property_readonly("k", &KGraph::k)
        .def_property_readonly("edges", &KGraph::edges)
        .def("edge_count", &KGraph::edge_count)
        .def("has_edge", [](const KGraph & h, Edge e) {
            std::sort(e.begin(), e.end());
            return h.has_edge(e);
        })
        .def("codegree", [](const KGraph & h, VertexSet s) {
            std::sort(s.begin(), s.end());
            return h.codegree(s);
        })
        .def("__eq__", &KGraph::operator==)
        .def("__repr__", [](const KGraph & h) {
            std::ostringstream out;
            out << "KGraph(n=" << h.n() << ", k=" << h.k() << ", edges=" << h.edge_count() << ")";
            return out.str();
        });

    m.def("parse_kgraph", [](const std::string & text) { return parse_kgraph(text); });
    m.def("format_kgraph", &format_kgraph);
    m.def("read_kgraph", [](const std::string & path) { return read_kgraph(path); });
    m.def("write_kgraph", [](const std::string & path, const KGraph & h) { write_kgraph(path, h); });

    m.def("extremal_construction", [](int k, int n) {
        auto ext = extremal_construction(k, n);
        return py::make_tuple(ext.graph, ext.a, ext.b);
    });
    m.def("random_kgraph", [](int n, int k, const std::string & p, std::uint64_t seed) {
        return random_kgraph(n, k, parse_rational(p), seed);
    }, py::arg("n"), py::arg("k"), py::arg("p"), py::arg("seed"));
    m.def("min_codegree", [](const KGraph & h) {
        auto d = min_codegree(h);
        return py::make_tuple(d.value, d.witness);
    });
    m.def("count_tk_copies", [](const KGraph & h) { return enumerate_tk_copies(h).size(); });

    m.def("perfect_tiling", [](const KGraph & h, std::uint64_t budget) {
        ExactOptions opts;
        opts.budget = budget;
        auto d = perfect_tiling(h, opts);
        Json j{{"status", verdict_json(d.verdict)}, {"reason", d.reason}, {"nodes", d.nodes}};
        if (d.tiling) {
            j["witness"] = to_json(*d.tiling);
            j["validated"] = validate_tiling(h, *d.tiling, true).ok;
        }
        return to_python(j);
    }, py::arg("h"), py::arg("budget") = 50'000'000);

    m.def("max_tiling", [](const KGraph & h, std::uint64_t budget) {
        ExactOptions opts;
        opts.budget = budget;
        auto r = max_tiling(h, opts);
        return to_python(Json{{"status", verdict_json(r.verdict)}, {"lo", r.lo}, {"hi", r.hi},
            {"lp", to_pq_string(r.lp_bound)}, {"witness", to_json(r.tiling)}});
    }, py::arg("h"), py::arg("budget") = 50'000'000);

    m.def("perfect_fractional_tiling", [](const KGraph & h) {
        auto r = perfect_fractional_tiling(h);
        Json j{{"columns", r.columns}};
        if (r.tiling) {
            j["status"] = verdict_json(Verdict::yes);
            j["tiling"] = to_json(*r.tiling);
        }
        else {
            j["status"] = verdict_json(Verdict::no);
            j["certificate"] = to_json(*r.certificate);
        }
        return to_python(j);
    });

    m.def("verify_certificate", [](const KGraph & h, const std::vector<std::string> & a) {
        FarkasCertificate cert;
        for (auto & q : a)
            cert.a.push_back(parse_rational(q));
        auto chk = verify_certificate(h, cert);
        return py::make_tuple(chk.valid, to_pq_string(chk.total));
    });

    m.def("run_cli", [](const std::vector<std::string> & args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
