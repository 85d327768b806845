#include <doctest.h>

#include <stdexcept>

#include <random>

#include "apexion/enumerate.hpp"
#include "apexion/minor.hpp"
#include "apexion/named_graphs.hpp"

using namespace apexion;

TEST_CASE("self minor via singleton sets") {
  SmallGraph pet = petersen_graph();
  auto d = has_minor(pet, pet);
  REQUIRE(d.has_value());
  CHECK(check_branch_decomposition(pet, pet, *d));
  for (VertexSet s : d->sets) CHECK(std::popcount(s) == 1);
}

TEST_CASE("Petersen graph") {
  SmallGraph pet = petersen_graph();
  auto k5 = has_minor(pet, complete_graph(5));
  REQUIRE(k5.has_value());
  CHECK(check_branch_decomposition(pet, complete_graph(5), *k5));
  // triangle-free with 15 edges: no contraction sequence reaches K6
  CHECK_FALSE(has_minor(pet, complete_graph(6)).has_value());
  CHECK_FALSE(has_k6_minor(pet).has_value());
}

TEST_CASE("k6 specialization") {
  CHECK(has_k6_minor(complete_graph(6)).has_value());
  CHECK_FALSE(has_k6_minor(coned_icosahedron()).has_value());

  // density above the Mader bound forces the minor
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    SmallGraph g = random_graph(13, 43, rng());
    auto w = has_k6_minor(g);
    REQUIRE(w.has_value());
    CHECK(check_branch_decomposition(g, complete_graph(6), *w));
  }
}

TEST_CASE("k6 minor in a disconnected graph lies in one component") {
  SmallGraph g = disjoint_union(cycle_graph(5), complete_graph(7));
  auto w = has_k6_minor(g);
  REQUIRE(w.has_value());
  CHECK(check_branch_decomposition(g, complete_graph(6), *w));
}

TEST_CASE("oracle basics") {
  CHECK(minor_oracle(complete_graph(4), complete_graph(3)));
  CHECK(minor_oracle(cycle_graph(5), complete_graph(3)));
  CHECK(minor_oracle(complete_bipartite_graph(3, 3), complete_graph(4)));
  CHECK_FALSE(minor_oracle(cycle_graph(5), complete_graph(4)));
  CHECK_THROWS_AS(minor_oracle(SmallGraph(10), complete_graph(3)),
                  std::invalid_argument);
}

TEST_CASE("search agrees with oracle on order <= 6 classes") {
  // order 7 is swept in the acceptance suite
  std::vector<SmallGraph> patterns = {complete_graph(3), complete_graph(4),
                                      complete_graph(5),
                                      complete_bipartite_graph(3, 3)};
  for (int n = 1; n <= 6; ++n) {
    EnumSpec spec;
    spec.order = n;
    for (const SmallGraph& g : enumerate_all(spec)) {
      for (const SmallGraph& h : patterns) {
        auto found = has_minor(g, h);
        if (found) CHECK(check_branch_decomposition(g, h, *found));
        CHECK(found.has_value() == minor_oracle(g, h));
      }
    }
  }
}

TEST_CASE("monotonicity under one-step minors") {
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 10) {
    SmallGraph g = random_graph(9, 20, rng());
    for (const Edge& e : g.edges()) {
      if (has_k6_minor(delete_edge(g, e))) CHECK(has_k6_minor(g).has_value());
      if (has_k6_minor(contract_edge(g, e))) CHECK(has_k6_minor(g).has_value());
    }
    ++checked;
  }
}

TEST_CASE("disconnected pattern is out of contract") {
  CHECK_THROWS_AS(
      has_minor(complete_graph(6), disjoint_union(complete_graph(2), complete_graph(2))),
      std::invalid_argument);
}
