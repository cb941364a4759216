#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "matchstick/enumerate.hpp"
#include "matchstick/graph.hpp"
#include "matchstick/realize.hpp"
#include "oracle.hpp"

using namespace matchstick;

namespace {

Graph parse(const char* t) { return Graph::from_text(t); }

SolveConfig quick_config() {
  SolveConfig cfg;
  cfg.restarts = 64;
  return cfg;
}

}  // namespace

TEST_CASE("embedding text round trip") {
  Embedding e;
  e.points = {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
  Embedding back = Embedding::from_xy(e.to_xy());
  REQUIRE(back.points.size() == 3);
  for (int v = 0; v < 3; ++v) {
    CHECK(back.points[v][0] == e.points[v][0]);
    CHECK(back.points[v][1] == e.points[v][1]);
  }
  CHECK_THROWS_AS(Embedding::from_xy("0 nope 3"), std::invalid_argument);
}

TEST_CASE("obstruction certificates") {
  auto k4 = exact_obstruction(parse("4:0-1,0-2,0-3,1-2,1-3,2-3"));
  REQUIRE(k4.has_value());
  CHECK(k4->kind == Obstruction::Kind::k4_subgraph);
  CHECK(check_obstruction(parse("4:0-1,0-2,0-3,1-2,1-3,2-3"), *k4));

  // K2,3: vertices 0 and 1 share the three neighbors 2, 3, 4.
  Graph k23 = parse("5:0-2,0-3,0-4,1-2,1-3,1-4");
  auto shared = exact_obstruction(k23);
  REQUIRE(shared.has_value());
  CHECK(shared->kind == Obstruction::Kind::shared_neighborhood);
  CHECK(check_obstruction(k23, *shared));

  // Three triangles on a common edge.
  Graph book = parse("5:0-1,0-2,0-3,0-4,1-2,1-3,1-4");
  auto book_obs = exact_obstruction(book);
  REQUIRE(book_obs.has_value());
  CHECK(check_obstruction(book, *book_obs));

  CHECK_FALSE(exact_obstruction(parse("3:0-1,0-2,1-2")).has_value());
  CHECK_FALSE(exact_obstruction(parse("4:0-1,0-2,0-3,1-2,1-3")).has_value());

  Obstruction bogus{Obstruction::Kind::k4_subgraph, {0, 1, 2, 3}};
  CHECK_FALSE(check_obstruction(parse("4:0-1,1-2,2-3"), bogus));
}

TEST_CASE("k4 and k23 are refused with a certificate") {
  for (const char* t :
       {"4:0-1,0-2,0-3,1-2,1-3,2-3", "5:0-2,0-3,0-4,1-2,1-3,1-4"}) {
    RealizeOutcome out = realize(parse(t), quick_config());
    CHECK(out.verdict == RealizeOutcome::Verdict::obstructed);
    REQUIRE(out.obstruction.has_value());
    CHECK(check_obstruction(parse(t), *out.obstruction));
    CHECK_FALSE(out.embedding.has_value());
  }
}

TEST_CASE("triangle realizes with exact unit sides") {
  RealizeOutcome out = realize(parse("3:0-1,0-2,1-2"), quick_config());
  REQUIRE(out.verdict == RealizeOutcome::Verdict::realized);
  ValidationReport rep = validate_embedding(parse("3:0-1,0-2,1-2"), *out.embedding);
  CHECK(rep.max_length_deviation < 1e-8);
  CHECK(rep.min_incident_angle == doctest::Approx(std::acos(0.5)).epsilon(1e-6));
}

TEST_CASE("trees get exact drawings") {
  auto free = oracle::free_tree_counts(9);
  auto levels = enumerate_connected_up_to(8);
  for (int n = 1; n <= 8; ++n) {
    std::int64_t seen = 0;
    for (const Graph& g : levels[n - 1]) {
      if (!g.is_tree()) continue;
      ++seen;
      Embedding e = realize_tree(g);
      ValidationReport rep = validate_embedding(g, e);
      CHECK(rep.max_length_deviation < 1e-12);
      CHECK(rep.passes(SolveConfig{}.tightened(10.0)));
    }
    CHECK(seen == free[n + 1]);
  }
  CHECK_THROWS_AS(realize_tree(parse("3:0-1,0-2,1-2")), std::invalid_argument);
}

TEST_CASE("star with ten edges still has room") {
  Graph star(11);
  for (int leaf = 1; leaf <= 10; ++leaf) star.add_edge(0, leaf);
  ValidationReport rep = validate_embedding(star, realize_tree(star));
  CHECK(rep.max_length_deviation < 1e-12);
  CHECK(rep.min_incident_angle > 0.3);
  CHECK(rep.passes(SolveConfig{}.tightened(10.0)));
}

TEST_CASE("realize solves small cyclic graphs") {
  // Square, pentagon, hexagon, triangle with a tail, bowtie.
  for (const char* t :
       {"4:0-1,1-2,2-3,0-3", "5:0-1,1-2,2-3,3-4,0-4",
        "6:0-1,1-2,2-3,3-4,4-5,0-5", "4:0-1,0-2,1-2,2-3",
        "5:0-1,0-2,1-2,0-3,0-4,3-4"}) {
    Graph g = parse(t);
    RealizeOutcome out = realize(g, quick_config());
    REQUIRE(out.verdict == RealizeOutcome::Verdict::realized);
    CHECK(validate_embedding(g, *out.embedding).passes(SolveConfig{}));
  }
}

TEST_CASE("validator flags each kind of defect") {
  // Doubled lengths.
  Graph p3 = parse("4:0-1,1-2,2-3");
  Embedding stretched;
  stretched.points = {{0, 0}, {2, 0}, {4, 0}, {6, 0}};
  ValidationReport rep = validate_embedding(p3, stretched);
  CHECK(rep.max_length_deviation == doctest::Approx(1.0));
  CHECK_FALSE(rep.passes(SolveConfig{}));

  // A proper crossing between non-adjacent unit edges.
  Graph cross = parse("5:0-1,1-2,2-3,3-4");
  Embedding x;
  x.points = {{0, 0}, {1, 0}, {0.5, 0.6}, {0.5, -0.4}, {0.5 - std::sqrt(1 - 0.16), -0.4}};
  rep = validate_embedding(cross, x);
  CHECK(rep.min_crossing_margin == 0.0);
  CHECK_FALSE(rep.passes(SolveConfig{}));

  // Zero angle: two incident edges folded onto each other.
  Graph vee = parse("3:0-1,0-2");
  Embedding folded;
  folded.points = {{0, 0}, {1, 0}, {1, 1e-9}};
  rep = validate_embedding(vee, folded);
  CHECK(rep.min_incident_angle < 1e-6);
  CHECK_FALSE(rep.passes(SolveConfig{}));

  // A vertex sitting on an edge it does not belong to.
  Graph tee2 = parse("5:0-1,1-2,2-3,3-4,0-4");
  Embedding pinch;
  pinch.points = {{0, 0}, {1, 0}, {1.5, 0.8}, {0.5, 1e-8}, {-0.4, 0.9}};
  rep = validate_embedding(tee2, pinch);
  CHECK(rep.min_vertex_edge_distance < 1e-6);
  CHECK_FALSE(rep.passes(SolveConfig{}));

  // Two vertices nearly coincident.
  Embedding merged;
  merged.points = {{0, 0}, {1, 0}, {1.7, 0.7}, {1, 1e-8}, {0, 1e-8}};
  rep = validate_embedding(tee2, merged);
  CHECK(rep.min_vertex_separation < 1e-6);
  CHECK_FALSE(rep.passes(SolveConfig{}));
}

TEST_CASE("validator ignores rigid motions") {
  Graph g = parse("4:0-1,0-2,1-2,2-3");
  RealizeOutcome out = realize(g, quick_config());
  REQUIRE(out.verdict == RealizeOutcome::Verdict::realized);
  ValidationReport base = validate_embedding(g, *out.embedding);

  double c = std::cos(0.7), s = std::sin(0.7);
  Embedding moved = *out.embedding;
  for (auto& p : moved.points) {
    double xr = c * p[0] - s * p[1] + 3.25;
    double yr = s * p[0] + c * p[1] - 1.5;
    p = {xr, -yr};  // rotate, translate, reflect
  }
  ValidationReport rep = validate_embedding(g, moved);
  CHECK(rep.max_length_deviation == doctest::Approx(base.max_length_deviation).epsilon(1e-9));
  CHECK(rep.min_incident_angle == doctest::Approx(base.min_incident_angle).epsilon(1e-9));
  CHECK(rep.min_vertex_separation == doctest::Approx(base.min_vertex_separation).epsilon(1e-9));
}

TEST_CASE("gradient matches finite differences") {
  const char* texts[] = {"4:0-1,1-2,2-3,0-3", "5:0-1,0-2,1-2,2-3,3-4",
                         "6:0-1,1-2,2-3,3-4,4-5,0-5",
                         "5:0-1,0-2,0-3,0-4,1-2,3-4"};
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  for (const char* t : texts) {
    Graph g = parse(t);
    const int dim = 2 * g.vertex_count();
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> x(dim);
      for (double& c : x) c = box(rng);
      std::vector<double> grad = solver_gradient(g, x);
      const double h = 1e-6;
      for (int i = 0; i < dim; ++i) {
        std::vector<double> hi = x, lo = x;
        hi[i] += h;
        lo[i] -= h;
        double fd = (solver_objective(g, hi) - solver_objective(g, lo)) / (2 * h);
        CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-4).scale(1.0));
      }
    }
  }
}

TEST_CASE("first accepted restart wins, so larger budgets agree") {
  Graph g = parse("6:0-1,1-2,2-3,3-4,4-5,0-5");
  SolveConfig small = quick_config();
  SolveConfig large = quick_config();
  large.restarts = 256;
  RealizeOutcome a = realize(g, small);
  RealizeOutcome b = realize(g, large);
  REQUIRE(a.verdict == RealizeOutcome::Verdict::realized);
  REQUIRE(b.verdict == RealizeOutcome::Verdict::realized);
  CHECK(a.restarts_used == b.restarts_used);
  CHECK(a.embedding->to_xy() == b.embedding->to_xy());
}

TEST_CASE("repeated runs are bit identical") {
  Graph g = parse("5:0-1,0-2,1-2,2-3,3-4");
  RealizeOutcome a = realize(g, quick_config());
  RealizeOutcome b = realize(g, quick_config());
  REQUIRE(a.verdict == RealizeOutcome::Verdict::realized);
  CHECK(a.embedding->to_xy() == b.embedding->to_xy());
}

TEST_CASE("accepted embeddings hold up under tightened tolerances") {
  SolveConfig cfg = quick_config();
  for (const char* t : {"4:0-1,1-2,2-3,0-3", "5:0-1,0-2,1-2,2-3,3-4",
                        "6:0-1,0-2,1-2,2-3,3-4,3-5"}) {
    Graph g = parse(t);
    RealizeOutcome out = realize(g, cfg);
    REQUIRE(out.verdict == RealizeOutcome::Verdict::realized);
    CHECK(validate_embedding(g, *out.embedding).passes(cfg.tightened(10.0)));
  }
}

TEST_CASE("pose is pinned: first edge leaves the origin along +x") {
  Graph g = parse("4:0-1,1-2,2-3,0-3");
  RealizeOutcome out = realize(g, quick_config());
  REQUIRE(out.verdict == RealizeOutcome::Verdict::realized);
  auto [u, v] = g.edges().front();
  const auto& p = out.embedding->points;
  CHECK(std::abs(p[u][0]) < 1e-12);
  CHECK(std::abs(p[u][1]) < 1e-12);
  CHECK(std::abs(p[v][1]) < 1e-9);
  CHECK(p[v][0] > 0.9);
}
