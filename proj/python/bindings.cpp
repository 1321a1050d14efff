#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zeroforce/bounds.hpp"
#include "zeroforce/extremal.hpp"
#include "zeroforce/forcing.hpp"
#include "zeroforce/generators.hpp"
#include "zeroforce/graph6.hpp"
#include "zeroforce/harness.hpp"
#include "zeroforce/isomorphism.hpp"
#include "zeroforce/json_io.hpp"
#include "zeroforce/prooftrace.hpp"
#include "zeroforce/solver.hpp"

namespace py = pybind11;

namespace {

// Python callers pass vertex lists; VertexSet stays an implementation detail.
zf::VertexSet set_from_list(const zf::Graph& g, const std::vector<int>& vertices) {
    zf::VertexSet s(g.order());
    for (int v : vertices) {
        if (v < 0 || v >= g.order()) throw zf::DomainError("vertex out of range");
        s.set(v);
    }
    return s;
}

py::dict trace_to_dict(const zf::ForcingTrace& t) {
    py::dict d;
    d["initial"] = t.initial.to_vector();
    d["steps"] = t.steps;
    d["final"] = t.final.to_vector();
    return d;
}

py::dict result_to_dict(const zf::ForcingNumberResult& r) {
    py::dict d;
    d["status"] = r.status == zf::SolverStatus::kExact ? "EXACT" : "BOUNDS";
    d["lo"] = r.lo;
    d["hi"] = r.hi;
    d["certificate"] =
        r.certificate ? py::object(py::cast(r.certificate->to_vector())) : py::object(py::none());
    d["explored"] = r.explored;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "forcing-number toolkit core";

    py::register_exception<zf::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<zf::UnsupportedSizeError>(m, "UnsupportedSizeError", PyExc_ValueError);

    py::class_<zf::Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edges", &zf::Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &zf::Graph::order)
        .def_property_readonly("size", &zf::Graph::size)
        .def("add_edge", &zf::Graph::add_edge)
        .def("has_edge", &zf::Graph::has_edge)
        .def("degree", &zf::Graph::degree)
        .def("neighbors", [](const zf::Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("edges", &zf::Graph::edges)
        .def("__eq__", [](const zf::Graph& a, const zf::Graph& b) { return a == b; })
        .def("__repr__", [](const zf::Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) +
                   ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("parse_graph6", &zf::parse_graph6);
    m.def("encode_graph6", &zf::encode_graph6);
    m.def("parse_edge_list", &zf::parse_edge_list);
    m.def("encode_edge_list", &zf::encode_edge_list);
    m.def("generate", [](const std::string& spec) { return zf::generate(spec); });

    m.def("girth", [](const zf::Graph& g) -> py::object {
        zf::Girth v = zf::girth(g);
        return v ? py::object(py::int_(*v)) : py::object(py::none());
    });
    m.def("degree_stats", [](const zf::Graph& g) {
        zf::DegreeStats s = zf::degree_stats(g);
        py::dict d;
        d["delta"] = s.delta;
        d["Delta"] = s.Delta;
        d["m"] = s.m;
        return d;
    });
    m.def("components", [](const zf::Graph& g) {
        std::vector<std::vector<int>> out;
        for (const zf::VertexSet& c : zf::components(g)) out.push_back(c.to_vector());
        return out;
    });
    m.def("is_isomorphic", &zf::is_isomorphic);

    m.def("closure", [](const zf::Graph& g, const std::vector<int>& initial) {
        return trace_to_dict(zf::closure(g, set_from_list(g, initial)));
    });
    m.def("is_forcing_set", [](const zf::Graph& g, const std::vector<int>& s) {
        return zf::is_forcing_set(g, set_from_list(g, s));
    });

    m.def(
        "forcing_number_exact",
        [](const zf::Graph& g, std::uint64_t budget) {
            return result_to_dict(zf::forcing_number_exact(g, budget));
        },
        py::arg("g"), py::arg("budget") = zf::kDefaultSolverBudget);
    m.def("greedy_minimal_forcing_set", [](const zf::Graph& g) {
        return zf::greedy_minimal_forcing_set(g).to_vector();
    });
    m.def("verify_certificate",
          [](const zf::Graph& g, const std::vector<int>& s, bool claim_minimum) {
              return zf::verify_certificate(g, set_from_list(g, s), claim_minimum);
          });

    m.def("girth_degree_bound", &zf::girth_degree_bound);
    m.def("mantel_max_edges", &zf::mantel_max_edges);
    m.def("davila_kenter_threshold", &zf::davila_kenter_threshold);
    m.def("ex_c3c4", &zf::ex_c3c4);

    m.def(
        "analyze",
        [](const zf::Graph& g, const std::vector<int>& initial, int window) {
            zf::ForcingTrace t = zf::closure(g, set_from_list(g, initial));
            zf::Decomposition dec = zf::decompose(g, t, window);
            return zf::decomposition_to_json(dec, zf::check_claims(g, dec)).dump();
        },
        py::arg("g"), py::arg("initial"), py::arg("window"),
        "Window decomposition plus claim checks, as a JSON string");

    m.def(
        "verify_graph",
        [](const zf::Graph& g, std::uint64_t budget) {
            return zf::report_to_json(zf::verify_graph(g, budget)).dump();
        },
        py::arg("g"), py::arg("budget") = zf::kDefaultSolverBudget,
        "Girth-bound report for one graph, as a JSON string");

    m.def("max_c3c4_free", [](int n) {
        zf::ExtremalResult r = zf::max_c3c4_free(n);
        py::dict d;
        d["n"] = r.n;
        d["max_edges"] = r.max_edges;
        std::vector<std::string> witnesses;
        witnesses.reserve(r.witnesses.size());
        for (const zf::Graph& w : r.witnesses) witnesses.push_back(zf::encode_graph6(w));
        d["witnesses"] = witnesses;
        d["explored"] = r.explored;
        return d;
    });
}
