#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchstick {

// Hard capacity of the adjacency rows.  Connected graphs with up to ten
// edges never need more than eleven vertices.
inline constexpr int kMaxVertices = 11;

// Simple undirected graph, one adjacency bitmask per vertex.  Vertices are
// labeled 0..vertex_count()-1; self-loops are rejected.  Values are cheap to
// copy and never mutate shared state, so they can cross threads freely.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  // Parses the "n:u-v,u-v,..." interchange form, e.g. "3:0-1,0-2".
  // Throws std::invalid_argument on malformed input.
  static Graph from_text(std::string_view text);

  // Serializes with edges sorted lexicographically; inverse of from_text.
  std::string to_text() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Bitmask of neighbors of v.
  std::uint16_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  int max_degree() const;

  // Degrees sorted descending.
  std::vector<int> degree_sequence() const;

  // Edge list as (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool connected() const;
  bool is_tree() const { return connected() && m_ == n_ - 1; }

  // Copy with vertex i renamed to perm[i].
  Graph relabeled(std::span<const int> perm) const;

  // Copy without edge (u,v); endpoints left isolated are dropped and the
  // remaining labels compacted downward.
  Graph without_edge_cleaned(int u, int v) const;

  // Copy with edge (u,v) replaced by a two-edge path through a new vertex.
  Graph subdivided(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

// Isomorphism-class key: vertex count plus the bit-packed upper triangle of
// the canonically relabeled adjacency matrix.  Keys compare equal exactly
// when the underlying graphs are isomorphic.
struct CanonicalKey {
  std::uint8_t n = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalKey&) const = default;
  std::string to_hex() const;
};

// Canonical relabeling permutation (perm[old] = new position).
std::array<int, kMaxVertices> canonical_labeling(const Graph& g);

CanonicalKey canonical_form(const Graph& g);

// The canonically relabeled copy of g itself.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Exact order of the automorphism group, by backtracking over
// color-preserving vertex bijections.
std::int64_t automorphism_count(const Graph& g);

}  // namespace matchstick
