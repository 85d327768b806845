#include <doctest.h>

#include <random>

#include "apexion/canonical.hpp"
#include "apexion/graph6.hpp"
#include "apexion/named_graphs.hpp"
#include "apexion/transforms.hpp"
#include "test_util.hpp"

using namespace apexion;

TEST_CASE("relabelings share a key") {
  SmallGraph pet = petersen_graph();
  CanonicalForm key = canonical_form(pet);
  for (int s = 0; s < 20; ++s)
    CHECK(canonical_form(test::random_relabeling(pet, 100 + s)) == key);
}

TEST_CASE("3-regular order-6 pair splits") {
  // same order, size, and degree sequence; only one has triangles
  CHECK(canonical_form(complete_bipartite_graph(3, 3)) != canonical_form(prism_graph()));
  CHECK_FALSE(are_isomorphic(complete_bipartite_graph(3, 3), prism_graph()));
}

TEST_CASE("canonical relabeling is a permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    SmallGraph c = canonical_relabel(g);
    CHECK(is_valid(c));
    CHECK(c.size() == g.size());
    CHECK(degree_sequence(c) == degree_sequence(g));
    CHECK(triangles(c).size() == triangles(g).size());
  }
}

TEST_CASE("key equality matches exhaustive permutation search") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    SmallGraph a(n), b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (rng() & 1) a.add_edge(u, v);
        if (rng() & 1) b.add_edge(u, v);
      }
    // mix in genuinely isomorphic pairs half the time
    if (rng() & 1) b = test::random_relabeling(a, rng());
    CHECK(are_isomorphic(a, b) == test::brute_force_isomorphic(a, b));
  }
}

TEST_CASE("highly symmetric graphs stay cheap") {
  CHECK(canonical_form(complete_graph(13)).key ==
        graph6_encode(complete_graph(13)));
  CHECK(canonical_form(SmallGraph(13)).key == graph6_encode(SmallGraph(13)));
  canonical_form(coned_icosahedron());  // must terminate quickly
}

TEST_CASE("dedup") {
  SmallGraph k4 = complete_graph(4);
  CHECK(dedup({k4, test::random_relabeling(k4, 3), cycle_graph(4)}).size() == 2);
  CHECK(dedup({}).empty());

  // all 20 triangles of K6 are equivalent under its automorphisms
  SmallGraph k6 = complete_graph(6);
  std::vector<SmallGraph> wyes;
  for (const Triangle& t : triangles(k6)) wyes.push_back(delta_wye(k6, t));
  CHECK(wyes.size() == 20);
  auto unique = dedup(wyes);
  REQUIRE(unique.size() == 1);
  for (std::size_t i = 1; i < wyes.size(); ++i)
    CHECK(test::brute_force_isomorphic(wyes[0], wyes[i]));

  // idempotence
  CHECK(dedup(unique).size() == unique.size());
}

TEST_CASE("canonical set shard merge") {
  CanonicalSet a, b;
  a.insert(complete_graph(4));
  a.insert(cycle_graph(4));
  b.insert(test::random_relabeling(complete_graph(4), 9));
  b.insert(path_graph(4));
  a.merge(std::move(b));
  CHECK(a.count() == 3);
  auto keys = a.sorted_keys();
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}
