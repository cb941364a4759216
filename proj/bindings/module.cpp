#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "matchstick/census.hpp"
#include "matchstick/enumerate.hpp"
#include "matchstick/graph.hpp"
#include "matchstick/realize.hpp"
#include "matchstick/topology.hpp"

namespace py = pybind11;
using namespace matchstick;

namespace {

SolveConfig make_config(std::uint64_t seed, int restarts, int max_iterations,
                        double length_tol, double cross_tol, double angle_tol,
                        double vertex_sep) {
  SolveConfig cfg;
  cfg.rng_seed = seed;
  cfg.restarts = restarts;
  cfg.max_iterations = max_iterations;
  cfg.length_tol = length_tol;
  cfg.cross_tol = cross_tol;
  cfg.angle_tol = angle_tol;
  cfg.vertex_sep = vertex_sep;
  return cfg;
}

py::object obstruction_dict(const std::optional<Obstruction>& ob) {
  if (!ob) return py::none();
  py::dict d;
  d["kind"] = ob->kind == Obstruction::Kind::k4_subgraph ? "k4_subgraph"
                                                         : "shared_neighborhood";
  d["vertices"] = ob->vertices;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "census engine for graphs drawable with non-crossing unit segments";

  m.def(
      "canonical_key",
      [](const std::string& text) {
        return canonical_form(Graph::from_text(text)).to_hex();
      },
      py::arg("graph"),
      "Hex canonical key; equal keys mean isomorphic graphs.");

  m.def(
      "canonical_text",
      [](const std::string& text) {
        return canonical_graph(Graph::from_text(text)).to_text();
      },
      py::arg("graph"), "Canonically relabeled copy of the graph.");

  m.def(
      "is_isomorphic",
      [](const std::string& a, const std::string& b) {
        return is_isomorphic(Graph::from_text(a), Graph::from_text(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "automorphism_count",
      [](const std::string& text) {
        return automorphism_count(Graph::from_text(text));
      },
      py::arg("graph"));

  m.def(
      "enumerate_connected",
      [](int n, int workers) {
        std::vector<std::string> out;
        for (const Graph& g : enumerate_connected(n, workers))
          out.push_back(g.to_text());
        return out;
      },
      py::arg("n"), py::arg("workers") = 1,
      "All connected graphs with n edges, one canonical representative each.");

  m.def(
      "is_planar",
      [](const std::string& text) { return is_planar(Graph::from_text(text)); },
      py::arg("graph"));

  m.def("planar_connected_count", &planar_connected_count, py::arg("n"),
        py::arg("workers") = 1);

  m.def(
      "topo_key",
      [](const std::string& text) {
        return topo_key(Graph::from_text(text)).to_hex();
      },
      py::arg("graph"),
      "Hex key of the smoothed graph; equal keys mean homeomorphic graphs.");

  m.def(
      "smooth",
      [](const std::string& text) {
        return smooth(Graph::from_text(text)).to_text();
      },
      py::arg("graph"), "Multigraph left after suppressing degree-2 vertices.");

  m.def(
      "face_count",
      [](const std::string& text) { return face_count(Graph::from_text(text)); },
      py::arg("graph"));

  m.def(
      "exact_obstruction",
      [](const std::string& text) {
        return obstruction_dict(exact_obstruction(Graph::from_text(text)));
      },
      py::arg("graph"),
      "Certificate that no drawing exists, or None when undecided.");

  m.def(
      "realize",
      [](const std::string& text, std::uint64_t seed, int restarts,
         int max_iterations, double length_tol, double cross_tol,
         double angle_tol, double vertex_sep) {
        SolveConfig cfg = make_config(seed, restarts, max_iterations,
                                      length_tol, cross_tol, angle_tol,
                                      vertex_sep);
        RealizeOutcome out = realize(Graph::from_text(text), cfg);
        py::dict d;
        switch (out.verdict) {
          case RealizeOutcome::Verdict::realized: d["verdict"] = "realized"; break;
          case RealizeOutcome::Verdict::obstructed: d["verdict"] = "obstructed"; break;
          case RealizeOutcome::Verdict::exhausted: d["verdict"] = "exhausted"; break;
        }
        d["xy"] = out.embedding ? py::cast(out.embedding->to_xy()) : py::none();
        d["obstruction"] = obstruction_dict(out.obstruction);
        d["restarts_used"] = out.restarts_used;
        return d;
      },
      py::arg("graph"), py::arg("seed") = SolveConfig{}.rng_seed,
      py::arg("restarts") = SolveConfig{}.restarts,
      py::arg("max_iterations") = SolveConfig{}.max_iterations,
      py::arg("length_tol") = SolveConfig{}.length_tol,
      py::arg("cross_tol") = SolveConfig{}.cross_tol,
      py::arg("angle_tol") = SolveConfig{}.angle_tol,
      py::arg("vertex_sep") = SolveConfig{}.vertex_sep,
      "Search for a unit-length non-crossing drawing.");

  m.def(
      "validate",
      [](const std::string& text, const std::string& xy, double length_tol,
         double cross_tol, double angle_tol, double vertex_sep) {
        SolveConfig cfg = make_config(0, 0, 0, length_tol, cross_tol, angle_tol,
                                      vertex_sep);
        Graph g = Graph::from_text(text);
        ValidationReport r = validate_embedding(g, Embedding::from_xy(xy));
        py::dict d;
        d["max_length_deviation"] = r.max_length_deviation;
        d["min_crossing_margin"] = r.min_crossing_margin;
        d["min_incident_angle"] = r.min_incident_angle;
        d["min_vertex_separation"] = r.min_vertex_separation;
        d["min_vertex_edge_distance"] = r.min_vertex_edge_distance;
        d["passes"] = r.passes(cfg);
        return d;
      },
      py::arg("graph"), py::arg("xy"),
      py::arg("length_tol") = SolveConfig{}.length_tol,
      py::arg("cross_tol") = SolveConfig{}.cross_tol,
      py::arg("angle_tol") = SolveConfig{}.angle_tol,
      py::arg("vertex_sep") = SolveConfig{}.vertex_sep,
      "Measure a drawing against the unit-length and clearance rules.");

  m.def(
      "census_counts",
      [](int n_max, int restarts, int workers) {
        SolveConfig cfg;
        cfg.restarts = restarts;
        std::vector<py::dict> out;
        for (const CensusLevel& level : census(n_max, cfg, workers)) {
          py::dict d;
          d["n"] = level.n;
          d["connected_classes"] = level.connected_classes;
          d["planar_classes"] = level.planar_classes;
          d["q"] = level.q;
          d["p"] = level.p;
          d["unresolved"] = level.unresolved.size();
          out.push_back(d);
        }
        return out;
      },
      py::arg("n_max"), py::arg("restarts") = SolveConfig{}.restarts,
      py::arg("workers") = 1,
      "Per-edge-count class counts up to n_max edges.");
}
