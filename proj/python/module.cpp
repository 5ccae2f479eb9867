#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "indsub/certificate_json.hpp"
#include "indsub/generators.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/oracle.hpp"
#include "indsub/runner.hpp"

namespace py = pybind11;
using namespace indsub;

namespace {

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (auto [u, v] : edges) sorted.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::from_edges(n, sorted);
}

std::string subdivision_json(const Graph& g, const SubdivisionCertificate& c) {
  CertificateDocument doc;
  doc.n = g.order();
  const std::size_t d = std::max<std::size_t>(2, max_degree(g, g.all()).degree);
  doc.params = CertificateParams{std::max(1, c.t - 1), c.t, d, Mode::scaled};
  doc.certificate = c;
  return to_json(doc);
}

py::dict solve(const Graph& g, int t, int k, const std::string& mode, bool force_pipeline,
               double star_constant, double log_exponent, double density_margin,
               std::size_t work_budget) {
  Params p;
  p.t = t;
  p.k = k;
  p.mode = parse_mode(mode);
  if (p.mode == Mode::scaled) {
    p.force_pipeline = force_pipeline;
    p.star_constant = star_constant;
    p.log_exponent = log_exponent;
    p.density_margin = density_margin;
    p.work_budget = work_budget;
  } else if (force_pipeline) {
    throw DomainError("force_pipeline requires mode='scaled'");
  }
  p.validate();
  SolveResult r = solve_instance(g, p);
  py::dict out;
  out["kind"] = std::string(to_string(r.outcome.kind()));
  out["certificate"] = r.certificate_json;
  out["trace"] = r.trace_text;
  out["verified"] = r.verified;
  out["deepest_claim"] = r.outcome.deepest_claim();
  out["calls"] = r.outcome.calls;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the indsub C++ library";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);
  py::register_exception<oracle::OracleError>(m, "OracleError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("degree", [](const Graph& g, Vertex v) { return g.degree(v); })
      .def("neighbours", [](const Graph& g, Vertex v) { return g.neighbour_list(v); })
      .def("edges", &Graph::edges)
      .def("__len__", &Graph::order);

  m.def("read_graph", [](const std::string& path) { return read_graph_file(path); });
  m.def("write_graph", [](const std::string& path, const Graph& g) { write_graph_file(path, g); });

  m.def("solve", &solve, py::arg("graph"), py::arg("t") = 3, py::arg("k") = 2,
        py::arg("mode") = "faithful", py::arg("force_pipeline") = false,
        py::arg("star_constant") = Params{}.star_constant,
        py::arg("log_exponent") = Params{}.log_exponent,
        py::arg("density_margin") = Params{}.density_margin,
        py::arg("work_budget") = Params{}.work_budget,
        "Runs the extractor. Returns kind, certificate JSON, trace and verified.");

  m.def(
      "check_certificate",
      [](const Graph& g, const std::string& json) {
        const DocumentCheck c = check_document(g, parse_certificate(json));
        return py::make_tuple(c.valid, c.report);
      },
      py::arg("graph"), py::arg("certificate"));

  m.def(
      "exact_max_stable",
      [](const Graph& g, std::size_t budget) {
        return oracle::exact_max_stable(g, budget).to_vector();
      },
      py::arg("graph"), py::arg("budget") = 50'000'000);
  m.def("induced_cycle_in_range", &oracle::induced_cycle_in_range, py::arg("graph"),
        py::arg("lo"), py::arg("hi"), py::arg("size_limit") = 40);
  m.def(
      "exhaustive_subdivision_search",
      [](const Graph& g, int t, std::size_t lo, std::size_t hi,
         std::size_t size_limit) -> std::optional<std::string> {
        auto c = oracle::exhaustive_subdivision_search(g, t, lo, hi, size_limit);
        if (!c) return std::nullopt;
        return subdivision_json(g, *c);
      },
      py::arg("graph"), py::arg("t"), py::arg("lo"), py::arg("hi"),
      py::arg("size_limit") = 15);

  m.def("gnp", &gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "chordal",
      [](std::size_t n, std::uint64_t seed) {
        ChordalGraph c = chordal(n, seed);
        return py::make_tuple(std::move(c.graph), c.elimination_order);
      },
      py::arg("n"), py::arg("seed"));
  m.def(
      "planted_subdivision",
      [](int t, std::size_t length, std::size_t noise_n, double noise_p,
         std::uint64_t seed) {
        PlantedInstance inst =
            planted_subdivision(t, uniform_lengths(t, length), noise_n, noise_p, seed);
        std::string cert = subdivision_json(inst.graph, inst.certificate);
        return py::make_tuple(std::move(inst.graph), cert);
      },
      py::arg("t"), py::arg("length"), py::arg("noise_n") = 0, py::arg("noise_p") = 0.0,
      py::arg("seed") = 0);
}
