#pragma once

#include <vector>

#include "matchstick/graph.hpp"

namespace matchstick {

// One representative per isomorphism class of connected graphs with exactly
// n edges (1 <= n <= 10), sorted by canonical key.  Representatives are in
// canonical labeling.  Generation is by canonical edge augmentation: a child
// with n+1 edges is kept only when deleting its designated edge reproduces
// the parent class, so no global seen-set is needed and the output is
// identical for every worker count.
std::vector<Graph> enumerate_connected(int n, int workers = 1);

// All levels at once: element k holds the classes with k+1 edges.  Cheaper
// than separate calls when several levels are needed.
std::vector<std::vector<Graph>> enumerate_connected_up_to(int n_max, int workers = 1);

// Kuratowski subdivision search: true iff g contains no subdivision of K5
// or of K3,3.
bool is_planar(const Graph& g);

// Number of connected planar classes with exactly n edges.
std::int64_t planar_connected_count(int n, int workers = 1);

}  // namespace matchstick
