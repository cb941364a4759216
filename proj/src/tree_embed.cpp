#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "matchstick/realize.hpp"

namespace matchstick {

namespace {

// Trees are drawn with nested angular cones: every subtree lives inside a
// cone whose apex trails back along the parent edge, sibling cones get
// disjoint angular intervals proportional to their leaf counts, and no cone
// opens wider than 2*pi/3.  Leaf counts are bounded by 10, so every interval
// keeps a width of at least (2*pi/3)/10 and all clearances stay far from the
// validation floors.
struct WedgeLayout {
  const Graph& g;
  std::vector<int> leaves_below;
  Embedding out;

  explicit WedgeLayout(const Graph& graph) : g(graph) {
    leaves_below.assign(g.vertex_count(), 0);
    out.points.resize(g.vertex_count());
  }

  int count_leaves(int v, int parent) {
    int total = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (u == parent || !g.has_edge(v, u)) continue;
      total += count_leaves(u, v);
    }
    leaves_below[v] = total == 0 ? 1 : total;
    return leaves_below[v];
  }

  void place(int v, int parent, double lo, double hi) {
    int total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (u != parent && g.has_edge(v, u)) total += leaves_below[u];
    double cursor = lo;
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (u == parent || !g.has_edge(v, u)) continue;
      double share = (hi - lo) * leaves_below[u] / total;
      double mid = cursor + share / 2;
      out.points[u] = {out.points[v][0] + std::cos(mid), out.points[v][1] + std::sin(mid)};
      double width = std::min(share, 2 * std::numbers::pi / 3);
      place(u, v, mid - width / 2, mid + width / 2);
      cursor += share;
    }
  }
};

}  // namespace

Embedding realize_tree(const Graph& g) {
  if (!g.is_tree()) throw std::invalid_argument("realize_tree requires a connected acyclic graph");

  WedgeLayout layout(g);
  if (g.vertex_count() == 1) {
    layout.out.points[0] = {0.0, 0.0};
    return layout.out;
  }
  layout.count_leaves(0, -1);
  layout.out.points[0] = {0.0, 0.0};
  layout.place(0, -1, 0.0, 2 * std::numbers::pi);
  return layout.out;
}

}  // namespace matchstick
