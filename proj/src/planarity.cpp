#include <array>
#include <cstdint>
#include <vector>

#include "matchstick/enumerate.hpp"
#include "matchstick/graph.hpp"

namespace matchstick {

namespace {

// Subdivision search state: place branch vertices, then connect required
// pairs by internally disjoint paths found with depth-first search.
struct SubdivisionSearch {
  const Graph& g;
  std::vector<std::pair<int, int>> pairs;  // branch slots to connect
  std::array<int, 6> branch{};             // slot -> vertex
  std::uint16_t branch_mask = 0;
  std::uint16_t interior_used = 0;

  explicit SubdivisionSearch(const Graph& graph) : g(graph) {}

  // Depth-first search for a path from cur to target avoiding used interior
  // vertices and all branch vertices; on success recurse into the next pair.
  bool path_dfs(int cur, int target, int pair_idx) {
    if (g.has_edge(cur, target) && connect(pair_idx + 1)) return true;
    std::uint16_t options = g.neighbors(cur);
    for (int next = 0; next < g.vertex_count(); ++next) {
      if (!(options & (1u << next))) continue;
      if ((branch_mask | interior_used) & (1u << next)) continue;
      interior_used |= std::uint16_t(1u << next);
      if (path_dfs(next, target, pair_idx)) return true;
      interior_used &= std::uint16_t(~(1u << next));
    }
    return false;
  }

  bool connect(int pair_idx) {
    if (pair_idx == static_cast<int>(pairs.size())) return true;
    auto [a, b] = pairs[pair_idx];
    return path_dfs(branch[a], branch[b], pair_idx);
  }
};

// Does g contain a subdivision of K5?
bool has_k5_subdivision(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() < 10) return false;
  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 4) cand.push_back(v);
  if (cand.size() < 5) return false;

  std::array<int, 5> pick{};
  auto choose = [&](auto&& self, int idx, int from) -> bool {
    if (idx == 5) {
      SubdivisionSearch s(g);
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) s.pairs.emplace_back(i, j);
      for (int i = 0; i < 5; ++i) {
        s.branch[i] = pick[i];
        s.branch_mask |= std::uint16_t(1u << pick[i]);
      }
      return s.connect(0);
    }
    for (std::size_t k = from; k < cand.size(); ++k) {
      pick[idx] = cand[k];
      if (self(self, idx + 1, static_cast<int>(k) + 1)) return true;
    }
    return false;
  };
  return choose(choose, 0, 0);
}

// Does g contain a subdivision of K3,3?
bool has_k33_subdivision(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() < 9) return false;
  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) cand.push_back(v);
  if (cand.size() < 6) return false;

  std::array<int, 6> pick{};
  auto try_splits = [&]() -> bool {
    // Fix pick[0] on the left side and choose its two partners.
    for (int i = 1; i < 5; ++i)
      for (int j = i + 1; j < 6; ++j) {
        SubdivisionSearch s(g);
        std::array<int, 3> left{0, i, j};
        std::array<int, 3> right{};
        int r = 0;
        for (int k = 1; k < 6; ++k)
          if (k != i && k != j) right[r++] = k;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) s.pairs.emplace_back(left[a], right[b]);
        for (int k = 0; k < 6; ++k) {
          s.branch[k] = pick[k];
          s.branch_mask |= std::uint16_t(1u << pick[k]);
        }
        if (s.connect(0)) return true;
      }
    return false;
  };
  auto choose = [&](auto&& self, int idx, int from) -> bool {
    if (idx == 6) return try_splits();
    for (std::size_t k = from; k < cand.size(); ++k) {
      pick[idx] = cand[k];
      if (self(self, idx + 1, static_cast<int>(k) + 1)) return true;
    }
    return false;
  };
  return choose(choose, 0, 0);
}

}  // namespace

bool is_planar(const Graph& g) { return !has_k33_subdivision(g) && !has_k5_subdivision(g); }

}  // namespace matchstick
