#include <ostream>
#include <set>
#include <tuple>

#include "matchstick/census.hpp"
#include "matchstick/topology.hpp"

namespace matchstick {

// Audit of a stored catalog: every embedding must re-validate at the
// configured tolerances and the classes, counts, ordering and ids must all
// be re-derivable from the stored graphs alone.
int verify_catalog(const std::filesystem::path& file, std::ostream& log, const SolveConfig& cfg) {
  int problems = 0;
  auto complain = [&](const std::string& what) {
    log << "verify: " << what << "\n";
    ++problems;
  };

  std::vector<CensusLevel> levels;
  try {
    levels = load_catalog(file);
  } catch (const std::exception& ex) {
    log << "verify: cannot load catalog: " << ex.what() << "\n";
    return 1;
  }

  for (const auto& level : levels) {
    std::int64_t member_total = 0;
    std::set<std::vector<std::uint8_t>> seen_topo;
    std::set<std::pair<int, std::uint64_t>> seen_graph;

    const ClassRecord* prev = nullptr;
    for (const auto& cls : level.classes) {
      if (prev) {
        auto tie_prev = std::tuple(prev->faces, prev->delta, prev->topo.bytes);
        auto tie_cur = std::tuple(cls.faces, cls.delta, cls.topo.bytes);
        if (!(tie_prev < tie_cur))
          complain("n=" + std::to_string(level.n) + " classes out of order near id_class " +
                   std::to_string(cls.index));
      }
      prev = &cls;
      if (!seen_topo.insert(cls.topo.bytes).second)
        complain("n=" + std::to_string(level.n) + " duplicate topo key in class " +
                 std::to_string(cls.index));

      const MemberRecord* prev_member = nullptr;
      for (std::size_t m = 0; m < cls.members.size(); ++m) {
        const auto& member = cls.members[m];
        const std::string want_id = std::to_string(level.n) + "-" + std::to_string(cls.index) +
                                    "-" + std::to_string(m + 1);
        if (member.id != want_id)
          complain("member id " + member.id + " should read " + want_id);

        const Graph& g = member.graph;
        if (g.edge_count() != level.n)
          complain(member.id + ": edge count " + std::to_string(g.edge_count()));
        if (!g.connected()) complain(member.id + ": graph not connected");
        if (canonical_graph(g).to_text() != g.to_text())
          complain(member.id + ": graph not stored in canonical labeling");
        if (!seen_graph.insert({member.key.n, member.key.bits}).second)
          complain(member.id + ": duplicate graph in level");
        if (prev_member && !(prev_member->key < member.key))
          complain(member.id + ": members out of canonical-key order");
        prev_member = &member;

        if (topo_key(g).bytes != cls.topo.bytes)
          complain(member.id + ": member does not smooth to the class topo key");
        if (face_count(g) != cls.faces)
          complain(member.id + ": face count mismatch");
        if (g.max_degree() != cls.delta)
          complain(member.id + ": max degree mismatch");

        auto rep = validate_embedding(g, member.embedding);
        if (!rep.passes(cfg)) complain(member.id + ": embedding fails validation");
        member_total += 1;
      }
    }

    if (level.q != static_cast<std::int64_t>(level.classes.size()))
      complain("n=" + std::to_string(level.n) + ": stored q " + std::to_string(level.q) +
               " but " + std::to_string(level.classes.size()) + " classes");
    if (level.p != member_total)
      complain("n=" + std::to_string(level.n) + ": stored p " + std::to_string(level.p) +
               " but " + std::to_string(member_total) + " members");
  }

  if (problems == 0) {
    log << "verify: catalog ok (" << levels.size() << " levels)\n";
    return 0;
  }
  log << "verify: " << problems << " problem(s)\n";
  return 1;
}

}  // namespace matchstick
