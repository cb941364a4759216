#include "matchstick/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "matchstick/enumerate.hpp"
#include "matchstick/topology.hpp"

namespace matchstick {

namespace {

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

std::vector<CensusLevel> census(int n_max, const SolveConfig& cfg, int workers) {
  if (n_max < 1 || n_max > 9) throw std::invalid_argument("census supports n_max 1..9");

  auto pool = enumerate_connected_up_to(n_max, workers);
  std::vector<CensusLevel> out;

  for (int n = 1; n <= n_max; ++n) {
    const auto& all = pool[n - 1];
    CensusLevel level;
    level.n = n;
    level.connected_classes = static_cast<std::int64_t>(all.size());

    std::vector<const Graph*> planar;
    for (const auto& g : all)
      if (is_planar(g)) planar.push_back(&g);
    level.planar_classes = static_cast<std::int64_t>(planar.size());

    // Realizability fan-out; slot per graph keeps the reduction ordered.
    std::vector<RealizeOutcome> outcomes(planar.size());
    parallel_for(static_cast<int>(planar.size()), workers,
                 [&](int i) { outcomes[i] = realize(*planar[i], cfg); });

    // Group realized graphs by homeomorphism class.
    std::vector<ClassRecord> classes;
    for (std::size_t i = 0; i < planar.size(); ++i) {
      if (outcomes[i].verdict == RealizeOutcome::Verdict::exhausted)
        level.unresolved.push_back({*planar[i], outcomes[i].restarts_used});
      if (outcomes[i].verdict != RealizeOutcome::Verdict::realized) continue;

      MemberRecord member;
      member.graph = *planar[i];
      member.key = canonical_form(member.graph);
      member.embedding = std::move(*outcomes[i].embedding);

      TopoKey topo = topo_key(member.graph);
      auto slot = std::find_if(classes.begin(), classes.end(),
                               [&](const ClassRecord& c) { return c.topo == topo; });
      if (slot == classes.end()) {
        ClassRecord fresh;
        fresh.topo = topo;
        fresh.faces = face_count(member.graph);
        fresh.delta = member.graph.max_degree();
        fresh.members.push_back(std::move(member));
        classes.push_back(std::move(fresh));
      } else {
        slot->members.push_back(std::move(member));
      }
    }

    std::sort(classes.begin(), classes.end(), [](const ClassRecord& a, const ClassRecord& b) {
      if (a.faces != b.faces) return a.faces < b.faces;
      if (a.delta != b.delta) return a.delta < b.delta;
      return a.topo < b.topo;
    });
    for (std::size_t c = 0; c < classes.size(); ++c) {
      auto& cls = classes[c];
      cls.index = static_cast<int>(c) + 1;
      std::sort(cls.members.begin(), cls.members.end(),
                [](const MemberRecord& a, const MemberRecord& b) { return a.key < b.key; });
      for (std::size_t m = 0; m < cls.members.size(); ++m) {
        cls.members[m].id = std::to_string(n) + "-" + std::to_string(cls.index) + "-" +
                            std::to_string(m + 1);
        level.p += 1;
      }
    }
    level.q = static_cast<std::int64_t>(classes.size());
    level.classes = std::move(classes);
    out.push_back(std::move(level));
  }
  return out;
}

std::int64_t extrapolate_lower_bound(std::span<const std::int64_t> series) {
  if (series.size() < 2) throw std::invalid_argument("need at least two terms");
  std::int64_t prev = series[series.size() - 2];
  std::int64_t last = series.back();
  if (prev <= 0) throw std::invalid_argument("series terms must be positive");
  return (last * last + prev / 2) / prev;  // nearest integer
}

}  // namespace matchstick
