#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "matchstick/graph.hpp"
#include "matchstick/realize.hpp"
#include "matchstick/topology.hpp"

namespace matchstick {

// One realized graph in the catalog.  Graphs are stored in canonical
// labeling and ids read "n-class-member".
struct MemberRecord {
  std::string id;
  Graph graph;
  CanonicalKey key;
  Embedding embedding;
};

// A homeomorphism class: members share the smoothed multigraph, the face
// count and the maximum degree.
struct ClassRecord {
  int index = 0;  // 1-based within the edge count
  int faces = 0;
  int delta = 0;
  TopoKey topo;
  std::vector<MemberRecord> members;
};

struct UnresolvedRecord {
  Graph graph;
  int restarts = 0;
};

// Census results for one edge count n: q homeomorphism classes holding p
// realized graphs, plus the graphs the solver could not settle (counted as
// unrealizable but reported separately).
struct CensusLevel {
  int n = 0;
  std::int64_t connected_classes = 0;
  std::int64_t planar_classes = 0;
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::vector<ClassRecord> classes;
  std::vector<UnresolvedRecord> unresolved;
};

// Full pipeline for n = 1..n_max: enumerate connected classes, keep the
// planar ones, decide realizability, group by homeomorphism and assign ids.
// Classes are ordered by (faces, max degree, topo key) and members by
// canonical key; the output is identical for every worker count.
std::vector<CensusLevel> census(int n_max, const SolveConfig& cfg = {}, int workers = 1);

// Nearest integer to last^2 / previous of a growing series; lower bound for
// the next term when the ratio of consecutive terms is nondecreasing.
std::int64_t extrapolate_lower_bound(std::span<const std::int64_t> series);

// Artifact emitters.  catalog.json is the source of truth; the tables, the
// plot data and the drawings are all derived from it.
void emit_table1(const std::vector<CensusLevel>& levels, const std::filesystem::path& file);
void emit_table2(const std::vector<CensusLevel>& levels, const std::filesystem::path& file);
void emit_catalog(const std::vector<CensusLevel>& levels, const std::filesystem::path& file);
void emit_plot_data(const std::vector<CensusLevel>& levels, const std::filesystem::path& file);
void emit_svgs(const std::vector<CensusLevel>& levels, const std::filesystem::path& dir);
void emit_embeddings(const std::vector<CensusLevel>& levels, const std::filesystem::path& dir);
void emit_unresolved(const std::vector<CensusLevel>& levels, const std::filesystem::path& file);
void emit_discrepancies(const std::vector<CensusLevel>& levels, const std::filesystem::path& file);

std::string render_svg(const Graph& g, const Embedding& e);

// Round-trip of catalog.json.
std::vector<CensusLevel> load_catalog(const std::filesystem::path& file);

// Re-validates every stored embedding and recomputes classes, counts and
// ids from the stored graphs (no re-solving).  Returns 0 when everything
// matches, 1 otherwise; problems are described on the log stream.
int verify_catalog(const std::filesystem::path& file, std::ostream& log,
                   const SolveConfig& cfg = {});

}  // namespace matchstick
