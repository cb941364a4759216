#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "matchstick/enumerate.hpp"
#include "matchstick/graph.hpp"
#include "oracle.hpp"

using namespace matchstick;

TEST_CASE("one edge gives the single-edge graph") {
  auto level = enumerate_connected(1);
  REQUIRE(level.size() == 1);
  CHECK(level[0].to_text() == "2:0-1");
}

TEST_CASE("class counts per edge count") {
  const std::int64_t expected[] = {1, 1, 3, 5, 12, 30, 79, 227};
  auto levels = enumerate_connected_up_to(8);
  REQUIRE(levels.size() == 8);
  for (int n = 1; n <= 8; ++n)
    CHECK(static_cast<std::int64_t>(levels[n - 1].size()) == expected[n - 1]);
}

TEST_CASE("enumeration matches brute force per class, not just per count") {
  auto levels = enumerate_connected_up_to(6);
  for (int n = 1; n <= 6; ++n) {
    std::set<CanonicalKey> got;
    for (const Graph& g : levels[n - 1]) got.insert(canonical_form(g));
    std::set<CanonicalKey> want;
    for (const Graph& g : oracle::connected_classes_bruteforce(n))
      want.insert(canonical_form(g));
    CHECK(got == want);
    CHECK(got.size() == levels[n - 1].size());
  }
}

TEST_CASE("output graphs are canonical, connected, sorted and distinct") {
  auto levels = enumerate_connected_up_to(7);
  for (int n = 1; n <= 7; ++n) {
    const auto& level = levels[n - 1];
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Graph& g = level[i];
      CHECK(g.edge_count() == n);
      CHECK(g.connected());
      CHECK(canonical_graph(g) == g);
      if (i > 0) CHECK(canonical_form(level[i - 1]) < canonical_form(g));
    }
  }
}

TEST_CASE("tree classes match the free-tree recurrence") {
  auto free = oracle::free_tree_counts(9);
  auto levels = enumerate_connected_up_to(8);
  for (int n = 1; n <= 8; ++n) {
    std::int64_t trees = std::count_if(levels[n - 1].begin(), levels[n - 1].end(),
                                       [](const Graph& g) { return g.is_tree(); });
    CHECK(trees == free[n + 1]);
  }
}

TEST_CASE("worker count does not change the output") {
  auto one = enumerate_connected(7, 1);
  auto four = enumerate_connected(7, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
}

TEST_CASE("enumeration rejects out-of-range sizes") {
  CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected(11), std::invalid_argument);
}

TEST_CASE("planarity of landmark graphs") {
  auto planar = [](const char* t) { return is_planar(Graph::from_text(t)); };
  CHECK(planar("3:0-1,0-2,1-2"));
  CHECK(planar("4:0-1,0-2,0-3,1-2,1-3,2-3"));  // K4
  // K5 and K3,3, then each minus one edge.
  CHECK_FALSE(planar("5:0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4,3-4"));
  CHECK(planar("5:0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4"));
  CHECK_FALSE(planar("6:0-3,0-4,0-5,1-3,1-4,1-5,2-3,2-4,2-5"));
  CHECK(planar("6:0-3,0-4,0-5,1-3,1-4,1-5,2-3,2-4"));
  // Subdividing does not create or destroy planarity.
  Graph k5 = Graph::from_text("5:0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4,3-4");
  CHECK_FALSE(is_planar(k5.subdivided(0, 1)));
  Graph k33 = Graph::from_text("6:0-3,0-4,0-5,1-3,1-4,1-5,2-3,2-4,2-5");
  CHECK_FALSE(is_planar(k33.subdivided(2, 5)));
  // Extra edges on K3,3 cannot restore planarity.
  Graph chord = k33;
  chord.add_edge(0, 1);
  CHECK_FALSE(is_planar(chord));
  CHECK_FALSE(is_planar(Graph::from_text(
      "7:0-3,0-4,0-5,1-3,1-4,1-5,2-3,2-4,2-5,2-6")));
}

TEST_CASE("the lone nonplanar 9-edge class is K3,3") {
  auto level = enumerate_connected(9, 2);
  CHECK(level.size() == 710);
  std::vector<Graph> nonplanar;
  for (const Graph& g : level)
    if (!is_planar(g)) nonplanar.push_back(g);
  REQUIRE(nonplanar.size() == 1);
  Graph k33 = Graph::from_text("6:0-3,0-4,0-5,1-3,1-4,1-5,2-3,2-4,2-5");
  CHECK(is_isomorphic(nonplanar[0], k33));
  CHECK(planar_connected_count(9, 2) == 709);
}
