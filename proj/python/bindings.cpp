#include "toricgraph/canonical.hpp"
#include "toricgraph/cone.hpp"
#include "toricgraph/divisor.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/normality.hpp"
#include "toricgraph/oracle.hpp"
#include "toricgraph/primes.hpp"
#include "toricgraph/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace tg = toricgraph;

namespace {

py::int_ to_py(const tg::Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list to_py(const tg::IntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::tuple to_py(const tg::SemigroupMonomial& m) { return py::make_tuple(m.exps, m.t_deg); }

py::object json_to_py(const tg::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict prime_dict(const tg::ClassifiedPrime& p) {
  py::dict d;
  d["kind"] = p.kind.name();
  d["label"] = p.kind.str();
  d["form"] = to_py(p.prime.form.coeffs());
  d["contains_t"] = p.prime.contains_t;
  if (p.kind.tag == tg::PrimeKind::Tag::Cover) d["cover"] = p.kind.cover;
  if (p.kind.tag == tg::PrimeKind::Tag::Variable) d["vertex"] = p.kind.vertex;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Divisorial data of the toric ring K[t, x_i t, x_i x_j t] of a finite simple graph.";

  py::register_exception<tg::GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<tg::NotNormalError>(m, "NotNormalError");
  py::register_exception<tg::InvariantViolation>(m, "InvariantViolation");
  py::register_exception<tg::CanonicalModuleError>(m, "CanonicalModuleError");

  py::class_<tg::Graph>(m, "Graph")
      .def(py::init(&tg::Graph::from_edges), py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return tg::parse_graph(text); }, py::arg("text"))
      .def_property_readonly("n", &tg::Graph::num_vertices)
      .def_property_readonly("edges", &tg::Graph::edges)
      .def("neighbors", &tg::Graph::neighbors)
      .def("__str__", &tg::format_graph)
      .def("__repr__", [](const tg::Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " edges=" + std::to_string(g.num_edges()) + ">";
      })
      .def(py::self == py::self);

  m.def("family", &tg::make_family, py::arg("name"), py::arg("params"));
  m.def("cycle", &tg::cycle_graph, py::arg("k"));
  m.def("path", &tg::path_graph, py::arg("k"));
  m.def("complete_bipartite", &tg::complete_bipartite_graph, py::arg("m"), py::arg("n"));
  m.def("whiskered_cycle", &tg::whiskered_cycle, py::arg("a"));

  m.def("connected_components", &tg::connected_components);
  m.def("is_bipartite", [](const tg::Graph& g) { return tg::bipartition(g).bipartite; });
  m.def("minimal_vertex_covers", &tg::minimal_vertex_covers);
  m.def("is_unmixed", [](const tg::Graph& g) { return tg::is_unmixed(g).unmixed; });
  m.def("induced_odd_cycles", &tg::induced_odd_cycles);
  m.def("odd_cycle_condition", &tg::odd_cycle_condition);
  m.def("dominated_odd_cycle_condition", &tg::dominated_odd_cycle_condition);
  m.def("whiskered_shape", [](const tg::Graph& g) -> py::object {
    auto s = tg::recognize_whiskered_cycle(g);
    if (!s) return py::none();
    return py::make_tuple(s->k, s->a);
  });

  m.def("facets", [](const tg::Graph& g) {
    py::list out;
    for (const auto& f : tg::facet_support_forms(tg::semigroup_generators(g))) out.append(to_py(f.coeffs()));
    return out;
  });

  m.def("is_normal", [](const tg::Graph& g) {
    const auto v = tg::is_normal(g);
    return py::make_tuple(v.normal, tg::to_string(v.reason));
  });
  m.def("normality_gap", [](const tg::Graph& g, int b_max) -> py::object {
    const auto r = tg::normality_oracle(g, b_max);
    if (r.ok()) return py::none();
    return to_py(*r.gap);
  }, py::arg("g"), py::arg("b_max"));

  m.def("height_one_primes", [](const tg::Graph& g) {
    py::list out;
    for (const auto& p : tg::height_one_primes(g)) out.append(prime_dict(p));
    return out;
  });

  m.def("class_group", [](const tg::Graph& g) {
    const auto cl = tg::class_group(tg::t_prime_forms(tg::height_one_primes(g)));
    py::dict d;
    d["r"] = cl.r;
    d["relation"] = to_py(cl.relation);
    d["rank"] = cl.rank;
    return d;
  });
  m.def("canonical_class", [](const tg::Graph& g) {
    return to_py(tg::canonical_class(tg::t_prime_forms(tg::height_one_primes(g))).coeffs);
  });
  m.def("is_gorenstein", [](const tg::Graph& g) {
    const auto v = tg::is_gorenstein(g);
    return py::make_tuple(v.gorenstein, v.a ? py::object(to_py(*v.a)) : py::none());
  });

  m.def("is_pseudo_gorenstein", [](const tg::Graph& g) {
    const auto v = tg::is_pseudo_gorenstein(tg::ToricCone::build(g));
    return py::make_tuple(v.pseudo_gorenstein, v.initial_degree, v.slice_count);
  });
  m.def("omega_slice", [](const tg::Graph& g, int b) {
    py::list out;
    for (const auto& p : tg::omega_slice(tg::ToricCone::build(g), b).points) out.append(to_py(p));
    return out;
  }, py::arg("g"), py::arg("b"));
  m.def("omega_generators", [](const tg::Graph& g, int b_max) {
    const auto r = tg::omega_generators(tg::ToricCone::build(g), b_max);
    py::list gens;
    for (const auto& p : r.generators) gens.append(to_py(p));
    return py::make_tuple(gens, r.truncated);
  }, py::arg("g"), py::arg("b_max"));

  m.def("analyze", [](const tg::Graph& g, bool verify, std::optional<int> omega_max_deg, bool canonical) {
    tg::AnalysisOptions opts;
    opts.verify = verify;
    opts.omega_max_degree = omega_max_deg;
    opts.canonical = canonical;
    return json_to_py(tg::analyze(g, opts));
  }, py::arg("g"), py::kw_only(), py::arg("verify") = false, py::arg("omega_max_deg") = py::none(),
        py::arg("canonical") = true);
}
