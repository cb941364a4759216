#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

// Undirected multigraph with loops, the codomain of degree-2 smoothing.
// Edges are kept as a sorted multiset of normalized (u,v) pairs with
// u <= v; a loop is the pair (v,v) and counts two toward the degree.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  static Multigraph from_graph(const Graph& g);
  static Multigraph from_text(std::string_view text);  // loops "v-v", parallels repeated
  std::string to_text() const;

  void add_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const { return static_cast<int>(edges.size()); }
  void normalize();

  bool operator==(const Multigraph&) const = default;
};

// Homeomorphism-class key: canonical byte encoding of the smoothed
// multigraph (vertex count, loop counts and edge multiplicities under the
// canonical vertex order).
struct TopoKey {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const TopoKey&) const = default;
  std::string to_hex() const;
};

// Suppresses degree-2 vertices until none remain: a vertex with two plain
// incidences to distinct neighbors is replaced by a direct edge, a vertex
// with a parallel pair to one neighbor becomes a loop there.  A vertex
// carrying only a loop is kept, so a pure cycle ends as one vertex with one
// loop.  Requires a connected input.
Multigraph smooth(const Multigraph& m);
Multigraph smooth(const Graph& g);

TopoKey multigraph_key(const Multigraph& m);
TopoKey topo_key(const Graph& g);

// Euler face count E - V + 2 of a connected planar graph, bounding face
// included.  Throws std::invalid_argument when disconnected or nonplanar.
int face_count(const Graph& g);

}  // namespace matchstick
