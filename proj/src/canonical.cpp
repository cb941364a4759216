#include "canonical.hpp"

#include <algorithm>
#include <cstring>
#include <map>

namespace matchstick::detail {

namespace {

// Union-find over vertex ids, small and rebuilt per search node.
struct Dsu {
  std::array<int, kMaxVertices> parent{};
  explicit Dsu(int n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Searcher {
  const WeightMatrix& g;
  std::vector<int> colors;

  // Vertices of each color cell, cells visited in ascending color order.
  std::vector<std::vector<int>> cells;

  std::array<int, kMaxVertices> pos_to_vertex{};
  std::array<bool, kMaxVertices> used{};

  std::vector<std::uint8_t> cur;
  std::vector<std::uint8_t> best;
  std::array<int, kMaxVertices> best_pos_to_vertex{};
  bool have_best = false;

  // Verified automorphisms, stored as vertex maps.
  std::vector<std::array<int, kMaxVertices>> autos;

  std::array<int, kMaxVertices + 1> row_offset{};

  explicit Searcher(const WeightMatrix& graph) : g(graph) {
    colors = refine_colors(g);
    int ncolors = 0;
    for (int c : colors) ncolors = std::max(ncolors, c + 1);
    cells.assign(ncolors, {});
    for (int v = 0; v < g.n; ++v) cells[colors[v]].push_back(v);

    // Key layout: byte 0 is n, then row k holds diag plus k column entries.
    row_offset[0] = 1;
    for (int k = 0; k < g.n; ++k) row_offset[k + 1] = row_offset[k] + k + 1;
    cur.assign(row_offset[g.n], 0);
    cur[0] = static_cast<std::uint8_t>(g.n);
  }

  int cell_of_depth(int depth) const {
    // Cells are consumed in color order; find the first with a free vertex.
    int seen = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      seen += static_cast<int>(cells[c].size());
      if (depth < seen) return static_cast<int>(c);
    }
    return -1;
  }

  // Writes the row for placing vertex v at position depth.
  void write_row(int depth, int v) {
    const int off = row_offset[depth];
    cur[off] = g.w[v][v];
    for (int j = 0; j < depth; ++j) cur[off + 1 + j] = g.w[pos_to_vertex[j]][v];
  }

  void record_automorphism() {
    std::array<int, kMaxVertices> map{};
    for (int i = 0; i < g.n; ++i) map[best_pos_to_vertex[i]] = pos_to_vertex[i];
    autos.push_back(map);
  }

  void search(int depth) {
    if (depth == g.n) {
      if (!have_best) {
        best = cur;
        best_pos_to_vertex = pos_to_vertex;
        have_best = true;
        return;
      }
      int cmp = std::memcmp(cur.data(), best.data(), cur.size());
      if (cmp < 0) {
        best = cur;
        best_pos_to_vertex = pos_to_vertex;
      } else if (cmp == 0) {
        record_automorphism();
      }
      return;
    }

    auto& cell = cells[cell_of_depth(depth)];

    // Candidates equivalent under an automorphism fixing the placed prefix
    // pointwise lead to identical subtrees; explore one per orbit.
    Dsu dsu(g.n);
    for (const auto& a : autos) {
      bool fixes_prefix = true;
      for (int i = 0; i < depth && fixes_prefix; ++i)
        fixes_prefix = a[pos_to_vertex[i]] == pos_to_vertex[i];
      if (!fixes_prefix) continue;
      for (int v = 0; v < g.n; ++v)
        if (a[v] != v) dsu.unite(v, a[v]);
    }

    std::array<bool, kMaxVertices> tried_root{};
    for (int v : cell) {
      if (used[v]) continue;
      int root = dsu.find(v);
      if (tried_root[root]) continue;
      tried_root[root] = true;

      write_row(depth, v);
      // Compare the whole prefix against the current best every time: best
      // can change while a subtree is explored, and a full fresh comparison
      // is the invariant that keeps the pruning sound.  A larger prefix can
      // only lead to larger keys, so it is safe to drop.
      if (have_best &&
          std::memcmp(cur.data(), best.data(), row_offset[depth + 1]) > 0)
        continue;
      used[v] = true;
      pos_to_vertex[depth] = v;
      search(depth + 1);
      used[v] = false;
    }
  }
};

}  // namespace

std::vector<int> refine_colors(const WeightMatrix& g) {
  const int n = g.n;
  std::vector<int> colors(n, 0);

  // Initial signature: loop count plus sorted incident weight multiset.
  {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{g.w[v][v]};
      std::vector<int> inc;
      for (int u = 0; u < n; ++u)
        if (u != v && g.w[v][u]) inc.push_back(g.w[v][u]);
      std::sort(inc.begin(), inc.end());
      sig.insert(sig.end(), inc.begin(), inc.end());
      groups[sig].push_back(v);
    }
    int c = 0;
    for (auto& [sig, members] : groups) {
      for (int v : members) colors[v] = c;
      ++c;
    }
  }

  // Iterate until the partition stops splitting.
  for (;;) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{colors[v]};
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && g.w[v][u]) nb.emplace_back(colors[u], g.w[v][u]);
      std::sort(nb.begin(), nb.end());
      for (auto [c, w] : nb) {
        sig.push_back(c);
        sig.push_back(w);
      }
      groups[sig].push_back(v);
    }
    if (static_cast<int>(groups.size()) == *std::max_element(colors.begin(), colors.end()) + 1) {
      // No further splits; group count matches the current color count.
      break;
    }
    int c = 0;
    for (auto& [sig, members] : groups) {
      for (int v : members) colors[v] = c;
      ++c;
    }
  }
  return colors;
}

CanonicalOrder canonical_order(const WeightMatrix& g) {
  Searcher s(g);
  if (g.n > 0) s.search(0);

  CanonicalOrder out;
  if (g.n == 0) {
    out.key = {0};
    return out;
  }
  out.key = std::move(s.best);
  for (int i = 0; i < g.n; ++i) out.perm[s.best_pos_to_vertex[i]] = i;
  return out;
}

namespace {

std::int64_t count_maps(const WeightMatrix& g, const std::vector<int>& colors,
                        std::array<int, kMaxVertices>& image,
                        std::array<bool, kMaxVertices>& taken, int v) {
  if (v == g.n) return 1;
  std::int64_t total = 0;
  for (int u = 0; u < g.n; ++u) {
    if (taken[u] || colors[u] != colors[v]) continue;
    if (g.w[u][u] != g.w[v][v]) continue;
    bool ok = true;
    for (int x = 0; x < v && ok; ++x) ok = g.w[v][x] == g.w[u][image[x]];
    if (!ok) continue;
    image[v] = u;
    taken[u] = true;
    total += count_maps(g, colors, image, taken, v + 1);
    taken[u] = false;
  }
  return total;
}

}  // namespace

std::int64_t count_automorphisms(const WeightMatrix& g) {
  if (g.n == 0) return 1;
  auto colors = refine_colors(g);
  std::array<int, kMaxVertices> image{};
  std::array<bool, kMaxVertices> taken{};
  return count_maps(g, colors, image, taken, 0);
}

}  // namespace matchstick::detail
