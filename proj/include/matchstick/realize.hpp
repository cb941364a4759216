#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

// Planar coordinates, one point per vertex.
struct Embedding {
  std::vector<std::array<double, 2>> points;

  // "v x y" per line with 17 significant digits; lossless for doubles.
  std::string to_xy() const;
  static Embedding from_xy(std::string_view text);
};

struct SolveConfig {
  int restarts = 512;
  int max_iterations = 400;
  double length_tol = 1e-9;   // max |edge length - 1|
  double cross_tol = 1e-6;    // min clearance between non-adjacent edges
  double angle_tol = 1e-6;    // min angle between incident edges, radians
  double vertex_sep = 1e-6;   // min vertex-vertex and vertex-edge clearance
  std::uint64_t rng_seed = 0x6d61746368ULL;

  // Solutions are accepted only when they stay valid with length_tol shrunk
  // and the clearance floors raised by this factor, so stored embeddings
  // never ride the thresholds.
  double headroom = 10.0;

  SolveConfig tightened(double factor) const {
    SolveConfig c = *this;
    c.length_tol /= factor;
    c.cross_tol *= factor;
    c.angle_tol *= factor;
    c.vertex_sep *= factor;
    return c;
  }
};

// A certificate that no valid embedding exists.
struct Obstruction {
  enum class Kind {
    k4_subgraph,          // four mutually adjacent vertices
    shared_neighborhood,  // two vertices with >= 3 common neighbors
  };
  Kind kind;
  std::vector<int> vertices;  // k4: the quad; shared: u, v, then the common neighbors
};

// Re-derives the certificate from the graph; used by tests and `verify`.
bool check_obstruction(const Graph& g, const Obstruction& obs);

// First certificate found in a fixed scan order, if any.  Absence proves
// nothing about realizability.
std::optional<Obstruction> exact_obstruction(const Graph& g);

struct ValidationReport {
  double max_length_deviation = 0;
  double min_crossing_margin = 0;   // non-adjacent edge pairs
  double min_incident_angle = 0;    // radians; pi is legal, 0 is not
  double min_vertex_separation = 0;
  double min_vertex_edge_distance = 0;  // vertex to non-incident edge

  bool passes(const SolveConfig& cfg) const;
};

// Strict geometric audit of an embedding against cfg tolerances.  Fields
// with no applicable pairs report +infinity.
ValidationReport validate_embedding(const Graph& g, const Embedding& e);

struct RealizeOutcome {
  enum class Verdict { realized, obstructed, exhausted };
  Verdict verdict;
  std::optional<Embedding> embedding;      // realized only
  std::optional<Obstruction> obstruction;  // obstructed only
  int restarts_used = 0;
};

// Exact drawing of a tree by nested angular wedges; every edge has length
// exactly 1 and all clearances are bounded well away from zero.  Throws if g
// is not connected and acyclic.
Embedding realize_tree(const Graph& g);

// Obstruction check, then tree construction, then restarted penalty
// optimization.  Deterministic for a fixed config; the restart loop stops at
// the first accepted solution, so enlarging the budget never loses one.
RealizeOutcome realize(const Graph& g, const SolveConfig& cfg = {});

// Penalty objective of the optimization stage and its analytic gradient,
// exposed so the gradient can be checked against finite differences.
// x holds 2*vertex_count values, (x0,y0,x1,y1,...).
double solver_objective(const Graph& g, const std::vector<double>& x);
std::vector<double> solver_gradient(const Graph& g, const std::vector<double>& x);

}  // namespace matchstick
