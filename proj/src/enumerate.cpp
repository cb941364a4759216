#include "matchstick/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <stdexcept>
#include <thread>

namespace matchstick {

namespace {

// Key of a graph already in canonical labeling: pack its own upper triangle,
// skipping the labeling search.
CanonicalKey packed_key(const Graph& canon) {
  CanonicalKey key;
  key.n = static_cast<std::uint8_t>(canon.vertex_count());
  for (auto [u, v] : canon.edges()) key.bits |= 1ull << (v * (v - 1) / 2 + u);
  return key;
}

// The designated deletion of a canonical graph: the lexicographically
// largest edge whose removal (with isolated-vertex cleanup) leaves the graph
// connected.  Every connected graph with at least two edges has one; the
// choice depends only on the canonical form, so isomorphic children agree on
// their parent class.
std::pair<int, int> canonical_deletion(const Graph& canon) {
  std::pair<int, int> pick{-1, -1};
  for (auto [u, v] : canon.edges()) {
    Graph rest = canon.without_edge_cleaned(u, v);
    if (rest.connected() && rest.edge_count() == canon.edge_count() - 1)
      pick = {u, v};  // edges() runs ascending, so the last valid one wins
  }
  return pick;
}

// All accepted children of one parent: extend by an edge between existing
// vertices or by a pendant vertex, keep those whose designated deletion
// reproduces the parent, deduplicated within the parent.
std::vector<Graph> children_of(const Graph& parent, const CanonicalKey& parent_key) {
  std::vector<Graph> out;
  std::vector<CanonicalKey> seen;
  const int n = parent.vertex_count();

  auto consider = [&](const Graph& child) {
    Graph canon = canonical_graph(child);
    CanonicalKey key = canonical_form(canon);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    auto [du, dv] = canonical_deletion(canon);
    if (canonical_form(canon.without_edge_cleaned(du, dv)) != parent_key) return;
    seen.push_back(key);
    out.push_back(std::move(canon));
  };

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (parent.has_edge(u, v)) continue;
      Graph child = parent;
      child.add_edge(u, v);
      consider(child);
    }
  if (n < kMaxVertices)
    for (int u = 0; u < n; ++u) {
      Graph child(n + 1);
      for (auto [a, b] : parent.edges()) child.add_edge(a, b);
      child.add_edge(u, n);
      consider(child);
    }
  return out;
}

template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<std::vector<Graph>> enumerate_connected_up_to(int n_max, int workers) {
  if (n_max < 1 || n_max > 10) throw std::invalid_argument("edge count out of capacity (1..10)");

  Graph k2(2);
  k2.add_edge(0, 1);
  std::vector<std::vector<Graph>> levels;
  levels.push_back({canonical_graph(k2)});

  for (int edges = 1; edges < n_max; ++edges) {
    const auto& level = levels.back();
    std::vector<std::vector<Graph>> buckets(level.size());
    parallel_for(static_cast<int>(level.size()), workers, [&](int i) {
      buckets[i] = children_of(level[i], packed_key(level[i]));
    });
    std::vector<Graph> next;
    for (auto& b : buckets)
      for (auto& g : b) next.push_back(std::move(g));
    std::sort(next.begin(), next.end(),
              [](const Graph& a, const Graph& b) { return packed_key(a) < packed_key(b); });
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<Graph> enumerate_connected(int n, int workers) {
  return enumerate_connected_up_to(n, workers).back();
}

std::int64_t planar_connected_count(int n, int workers) {
  auto all = enumerate_connected(n, workers);
  std::atomic<std::int64_t> planar{0};
  parallel_for(static_cast<int>(all.size()), workers, [&](int i) {
    if (is_planar(all[i])) planar.fetch_add(1);
  });
  return planar.load();
}

}  // namespace matchstick
