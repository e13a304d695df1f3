#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "dominion/approx.hpp"
#include "dominion/audit.hpp"
#include "dominion/bounds.hpp"
#include "dominion/exact.hpp"
#include "dominion/families.hpp"
#include "dominion/graph.hpp"
#include "dominion/params.hpp"
#include "dominion/reductions.hpp"
#include "dominion/transforms.hpp"
#include "dominion/witness.hpp"

namespace py = pybind11;
using namespace dominion;

namespace {

Param param_arg(const std::string& name) {
    auto p = param_from_name(name);
    if (!p) throw Error(ErrorCode::UnknownName, "unknown parameter " + name);
    return *p;
}

py::object value_py(const Value& v) {
    if (!v.finite()) return py::float_(INFINITY);
    return py::int_(v.get());
}

const char* label_text(std::uint8_t x) {
    static const char* names[] = {"", "a", "b", "ab"};
    return names[x & 3];
}

std::uint8_t label_from(const py::handle& h) {
    if (py::isinstance<py::str>(h)) {
        std::string s = h.cast<std::string>();
        if (s.empty()) return kEmpty;
        if (s == "a") return kA;
        if (s == "b") return kB;
        if (s == "ab" || s == "ba") return kAB;
        throw Error(ErrorCode::CodomainViolation, "bad rainbow label '" + s + "'");
    }
    int x = h.cast<int>();
    if (x < 0 || x > 255) throw Error(ErrorCode::CodomainViolation, "value out of range");
    return static_cast<std::uint8_t>(x);
}

Witness witness_arg(Param p, const py::sequence& values) {
    Witness w;
    w.kind = kind_for(p);
    for (const auto& h : values) w.values.push_back(label_from(h));
    return w;
}

py::list witness_py(const Witness& w) {
    py::list out;
    for (auto x : w.values) {
        if (w.kind == WitnessKind::Rainbow) out.append(label_text(x));
        else out.append(static_cast<int>(x));
    }
    return out;
}

py::object rational_py(const Rational& r) {
    if (r.denominator() == 1) return py::int_(r.numerator());
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

py::dict solution_py(const Solution& s) {
    py::dict d;
    d["value"] = value_py(s.value);
    d["witness"] = s.witness ? py::object(witness_py(*s.witness)) : py::none();
    return d;
}

py::dict partition_py(const SplitPartition& p) {
    py::dict d;
    d["clique"] = p.clique;
    d["independent"] = p.independent;
    return d;
}

Family family_arg(const std::string& name) {
    auto f = family_from_name(name);
    if (!f) throw Error(ErrorCode::UnknownName, "unknown family " + name);
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and approximate domination parameters";

    static py::exception<Error> error_type(m, "DominionError");
    py::register_exception_translator([](std::exception_ptr e) {
        try {
            if (e) std::rethrow_exception(e);
        } catch (const Error& err) {
            py::object exc = error_type;
            PyErr_SetObject(exc.ptr(), py::make_tuple(error_name(err.code()), err.what()).ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init(&build), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("to_text", &graph_to_string)
        .def_static("from_text", [](const std::string& text) {
            std::istringstream in(text);
            return read_graph(in);
        })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("read_graph", &read_graph_file, py::arg("path"));
    m.def("complete", &complete, py::arg("n"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("star", &star, py::arg("leaves"));
    m.def("complete_bipartite", &complete_bipartite, py::arg("a"), py::arg("b"));
    m.def("petersen", &petersen);
    m.def("is_split", [](const Graph& g) -> py::object {
        auto p = is_split(g);
        return p ? py::object(partition_py(*p)) : py::none();
    });

    m.def("parameters", [] {
        std::vector<std::string> out;
        for (int i = 0; i < kParamCount; ++i) out.emplace_back(info(static_cast<Param>(i)).name);
        return out;
    });
    m.def("families", [] {
        std::vector<std::string> out;
        for (Family f : kAllFamilies) out.emplace_back(family_name(f));
        return out;
    });
    m.def("generate", [](const std::string& family, int size) { return generate(family_arg(family), size); },
          py::arg("family"), py::arg("size"));

    m.def("solve",
          [](const std::string& param, const Graph& g, std::uint64_t budget) {
              Param p = param_arg(param);
              Solution s;
              {
                  py::gil_scoped_release release;
                  s = solve(p, g, budget);
              }
              return solution_py(s);
          },
          py::arg("param"), py::arg("graph"), py::arg("budget") = kDefaultBudget);
    m.def("defined_on", [](const std::string& param, const Graph& g) { return defined_on(param_arg(param), g); });
    m.def("is_feasible", [](const std::string& param, const Graph& g, const py::sequence& values) {
        Param p = param_arg(param);
        Witness w = witness_arg(p, values);
        return is_cover(p) ? is_cover_feasible(p, g, w) : is_feasible(p, g, w);
    });

    m.def("approximate", [](const std::string& param, const Graph& g) {
        Param p = param_arg(param);
        ApproxResult r = approximate(p, g);
        py::dict d;
        d["witness"] = witness_py(r.witness);
        d["weight"] = r.weight;
        d["ratio_bound"] = r.ratio_bound;
        return d;
    });

    m.def("transforms", [] {
        py::list out;
        for (const auto& t : transforms()) {
            py::dict d;
            d["id"] = t.id;
            d["target"] = info(t.target).name;
            d["source"] = info(t.source).name;
            d["a"] = rational_py(t.a);
            d["b"] = rational_py(t.b);
            d["side"] = side_condition_name(t.side);
            out.append(d);
        }
        return out;
    });
    m.def("transform", [](const std::string& entry, const Graph& g, const py::sequence& values) {
        const Transform& t = find_transform(entry);
        GuaranteeReport r = verify_guarantee(t, g, witness_arg(t.source, values));
        py::dict d;
        d["witness"] = witness_py(r.target);
        d["source_weight"] = r.source_weight;
        d["target_weight"] = r.target_weight;
        d["bound"] = rational_py(r.bound);
        d["feasible"] = r.feasible;
        d["pass"] = r.pass;
        return d;
    });

    m.def("bound", [](const std::string& row, const std::string& col) {
        const Bound& b = bound(param_arg(row), param_arg(col));
        py::dict d;
        d["kind"] = b.kind == BoundKind::Equal ? "equal" : b.kind == BoundKind::NoBound ? "none" : "linear";
        d["a"] = rational_py(b.a);
        d["b"] = rational_py(b.b);
        return d;
    });
    m.def("audit_graph", [](const Graph& g) {
        py::list out;
        for (const auto& v : audit_graph(g)) {
            py::dict d;
            d["row"] = info(v.row).name;
            d["col"] = info(v.col).name;
            d["rule"] = v.rule;
            d["row_value"] = value_py(v.row_value);
            d["col_value"] = value_py(v.col_value);
            d["limit"] = rational_py(v.limit);
            out.append(d);
        }
        return out;
    });
    m.def("hasse_and_classes", [] {
        Structure s = hasse_and_classes();
        py::list covers, classes;
        for (auto [lo, hi] : s.covers) covers.append(py::make_tuple(info(lo).name, info(hi).name));
        for (const auto& c : s.classes) {
            py::list names;
            for (Param p : c) names.append(info(p).name);
            classes.append(names);
        }
        py::dict d;
        d["covers"] = covers;
        d["classes"] = classes;
        d["linear"] = s.linear;
        return d;
    });

    m.def("set_cover_to_split", [](int ground, const std::vector<std::vector<int>>& sets) {
        SetCoverGadget gad = set_cover_to_split(SetCoverInstance{ground, sets});
        py::dict d;
        d["graph"] = gad.graph;
        d["partition"] = partition_py(gad.partition);
        return d;
    });
    m.def("split_witness_to_cover",
          [](int ground, const std::vector<std::vector<int>>& sets, const py::sequence& values) {
              return split_witness_to_cover(SetCoverInstance{ground, sets}, witness_arg(Param::RGamma2, values));
          });
    m.def("hypergraph_to_split", [](int vertices, const std::vector<std::vector<int>>& edges) {
        HypergraphGadget gad = hypergraph_to_split(Hypergraph{vertices, edges});
        py::dict d;
        d["graph"] = gad.graph;
        d["partition"] = partition_py(gad.partition);
        return d;
    });
    m.def("coloring_extraction",
          [](int vertices, const std::vector<std::vector<int>>& edges, const py::sequence& values) {
              return coloring_extraction(Hypergraph{vertices, edges}, witness_arg(Param::RGammaTX2, values));
          });
}
