#pragma once

// Shared canonical-ordering engine for small vertex-weighted graphs.  The
// simple-graph key and the multigraph key are both derived from it: entries
// hold edge multiplicities and the diagonal holds loop counts.

#include <array>
#include <cstdint>
#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick::detail {

struct WeightMatrix {
  int n = 0;
  std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> w{};
};

struct CanonicalOrder {
  std::array<int, kMaxVertices> perm{};  // perm[old vertex] = new position
  std::vector<std::uint8_t> key;         // n, then per position: diag + column above
};

// Equitable-partition colors (iterated neighborhood refinement).  Color
// values are isomorphism-invariant ranks, so two isomorphic matrices color
// corresponding vertices identically.
std::vector<int> refine_colors(const WeightMatrix& g);

// Minimum key over all vertex orders that list color classes in ascending
// color order.  Backtracking prunes on key prefixes and on automorphisms
// discovered along the way, which keeps highly symmetric inputs cheap.
CanonicalOrder canonical_order(const WeightMatrix& g);

std::int64_t count_automorphisms(const WeightMatrix& g);

}  // namespace matchstick::detail
