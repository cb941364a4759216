#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "matchstick/graph.hpp"
#include "oracle.hpp"

using namespace matchstick;

namespace {

Graph parse(const char* t) { return Graph::from_text(t); }

// Ground-truth isomorphism by trying every vertex bijection.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  std::vector<int> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabeled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("graph text round trip") {
  for (const char* t : {"2:0-1", "3:0-1,0-2,1-2", "5:0-1,0-4,1-2,2-3,3-4",
                        "6:0-3,0-4,0-5,1-3,1-4,1-5,2-3,2-4,2-5"}) {
    Graph g = parse(t);
    CHECK(g.to_text() == t);
    CHECK(Graph::from_text(g.to_text()) == g);
  }
  CHECK(parse("4:2-3,0-1").to_text() == "4:0-1,2-3");
}

TEST_CASE("graph parsing rejects malformed input") {
  for (const char* t : {"", "3", "3:0-3", "3:0-0", "3:0-1,0-1", "0:",
                        "3:0-1,", "3:,0-1", "3:01", "12:0-1", "3:a-b",
                        "3:0-1 0-2"}) {
    CHECK_THROWS_AS(Graph::from_text(t), std::invalid_argument);
  }
  // An edgeless graph is legal text.
  CHECK(Graph::from_text("3:").vertex_count() == 3);
  CHECK(Graph::from_text("3:").edge_count() == 0);
}

TEST_CASE("edge edits keep counts consistent") {
  Graph g = parse("4:0-1,1-2,2-3");
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(1) == 2);
  g.add_edge(0, 3);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(3, 0));
  g.remove_edge(0, 3);
  CHECK(g == parse("4:0-1,1-2,2-3"));
  CHECK(g.degree_sequence() == std::vector<int>{2, 2, 1, 1});
  CHECK(g.max_degree() == 2);
}

TEST_CASE("connectivity and trees") {
  CHECK(parse("2:0-1").connected());
  CHECK(parse("4:0-1,1-2,2-3").is_tree());
  CHECK_FALSE(parse("4:0-1,2-3").connected());
  CHECK_FALSE(parse("3:0-1,0-2,1-2").is_tree());
}

TEST_CASE("without_edge_cleaned drops isolated endpoints and compacts") {
  Graph g = parse("4:0-1,1-2,2-3");
  CHECK(g.without_edge_cleaned(2, 3).to_text() == "3:0-1,1-2");
  CHECK(g.without_edge_cleaned(1, 2).to_text() == "4:0-1,2-3");
  CHECK(parse("2:0-1").without_edge_cleaned(0, 1).to_text() == "0:");
}

TEST_CASE("subdivided splices a new vertex into an edge") {
  Graph g = parse("3:0-1,0-2,1-2").subdivided(1, 2);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(2, 3));
  CHECK(brute_isomorphic(g, parse("4:0-1,0-2,1-3,2-3")));
}

TEST_CASE("canonical key is invariant under relabeling") {
  std::mt19937_64 rng(20260823);
  const char* texts[] = {"5:0-1,0-4,1-2,2-3,3-4", "6:0-1,0-2,0-3,0-4,0-5,1-2",
                         "7:0-1,1-2,1-3,3-4,3-5,5-6",
                         "8:0-1,0-2,1-2,2-3,3-4,4-5,4-6,6-7"};
  for (const char* t : texts) {
    Graph g = parse(t);
    CanonicalKey want = canonical_form(g);
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 2500; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(g.relabeled(perm)) == want);
    }
  }
}

TEST_CASE("canonical keys separate the three 3-edge classes") {
  CanonicalKey path = canonical_form(parse("4:0-1,1-2,2-3"));
  CanonicalKey star = canonical_form(parse("4:0-1,0-2,0-3"));
  CanonicalKey tri = canonical_form(parse("3:0-1,0-2,1-2"));
  CHECK(path != star);
  CHECK(star != tri);
  CHECK(tri != path);
}

TEST_CASE("canonical graph is a stable isomorphic relabeling") {
  std::mt19937_64 rng(7);
  for (const char* t :
       {"6:0-1,1-2,2-3,3-4,4-5", "7:0-1,0-2,0-3,1-2,3-4,4-5,4-6"}) {
    Graph g = parse(t);
    Graph c = canonical_graph(g);
    CHECK(brute_isomorphic(g, c));
    CHECK(canonical_graph(c) == c);

    auto labeling = canonical_labeling(g);
    std::vector<int> perm(labeling.begin(), labeling.begin() + g.vertex_count());
    CHECK(g.relabeled(perm) == c);

    std::vector<int> shuffle_perm(g.vertex_count());
    std::iota(shuffle_perm.begin(), shuffle_perm.end(), 0);
    for (int trial = 0; trial < 200; ++trial) {
      std::shuffle(shuffle_perm.begin(), shuffle_perm.end(), rng);
      CHECK(canonical_graph(g.relabeled(shuffle_perm)) == c);
    }
  }
}

TEST_CASE("is_isomorphic agrees with exhaustive permutation search") {
  std::vector<Graph> pool = oracle::connected_classes_bruteforce(5);
  REQUIRE(pool.size() == 12);
  std::mt19937_64 rng(99);
  std::vector<Graph> shuffled;
  for (std::size_t i = 0; i < 8; ++i) {
    const Graph& g = pool[i];
    std::vector<int> p(g.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    shuffled.push_back(g.relabeled(p));
  }
  pool.insert(pool.end(), shuffled.begin(), shuffled.end());
  for (const Graph& a : pool)
    for (const Graph& b : pool) {
      bool truth = brute_isomorphic(a, b);
      CHECK(is_isomorphic(a, b) == truth);
      if (a.vertex_count() == b.vertex_count())
        CHECK((canonical_form(a) == canonical_form(b)) == truth);
    }
}

TEST_CASE("automorphism counts of known graphs") {
  CHECK(automorphism_count(parse("2:0-1")) == 2);
  CHECK(automorphism_count(parse("3:0-1,0-2,1-2")) == 6);
  CHECK(automorphism_count(parse("4:0-1,0-2,0-3")) == 6);
  CHECK(automorphism_count(parse("4:0-1,1-2,2-3")) == 2);
  CHECK(automorphism_count(parse("4:0-1,1-2,2-3,0-3")) == 8);
  CHECK(automorphism_count(parse("5:0-1,1-2,2-3,3-4,0-4")) == 10);
  CHECK(automorphism_count(parse("4:0-1,0-2,0-3,1-2,1-3,2-3")) == 24);
  // Petersen graph.
  CHECK(automorphism_count(parse("10:0-1,0-4,0-5,1-2,1-6,2-3,2-7,3-4,3-8,"
                                 "4-9,5-7,5-8,6-8,6-9,7-9")) == 120);
}

TEST_CASE("orbit-stabilizer: distinct relabelings times automorphisms is n!") {
  for (const char* t : {"4:0-1,1-2,2-3", "4:0-1,0-2,0-3", "5:0-1,0-2,1-2,2-3,3-4",
                        "6:0-1,1-2,2-3,3-4,4-5,0-5"}) {
    Graph g = parse(t);
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::string> images;
    std::int64_t factorial = 1;
    for (int k = 2; k <= g.vertex_count(); ++k) factorial *= k;
    do {
      images.insert(g.relabeled(perm).to_text());
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(static_cast<std::int64_t>(images.size()) * automorphism_count(g) ==
          factorial);
  }
}
