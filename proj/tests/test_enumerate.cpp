#include <doctest.h>

#include <stdexcept>

#include "apexion/canonical.hpp"
#include "apexion/enumerate.hpp"
#include "apexion/minor.hpp"
#include "apexion/named_graphs.hpp"

using namespace apexion;

namespace {

// brute force: all labeled graphs on n vertices, deduped
std::size_t brute_force_class_count(int n, const EnumSpec& spec) {
  CanonicalSet classes;
  const int m = n * (n - 1) / 2;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    SmallGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    if (g.size() < spec.min_size) continue;
    if (spec.max_size >= 0 && g.size() > spec.max_size) continue;
    if (min_degree(g) < spec.min_degree) continue;
    if (spec.connected_only && !is_connected(g)) continue;
    classes.insert(g);
  }
  return classes.count();
}

}  // namespace

TEST_CASE("fixed counts") {
  EnumSpec all4;
  all4.order = 4;
  CHECK(enumerate_all(all4).size() == 11);

  EnumSpec k4only;
  k4only.order = 4;
  k4only.min_degree = 3;
  auto graphs = enumerate_all(k4only);
  REQUIRE(graphs.size() == 1);
  CHECK(are_isomorphic(graphs[0], complete_graph(4)));

  EnumSpec k6only;
  k6only.order = 6;
  k6only.min_size = 15;
  k6only.max_size = 15;
  auto k6s = enumerate_all(k6only);
  REQUIRE(k6s.size() == 1);
  CHECK(are_isomorphic(k6s[0], complete_graph(6)));
}

TEST_CASE("counts cross-check brute force for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<EnumSpec> specs(4);
    for (auto& s : specs) s.order = n;
    specs[1].min_degree = 2;
    specs[2].connected_only = true;
    specs[3].min_size = 2;
    specs[3].max_size = n;
    for (const EnumSpec& spec : specs)
      CHECK(enumerate_all(spec).size() == brute_force_class_count(n, spec));
  }
}

TEST_CASE("output has no isomorphic pair and respects the spec") {
  EnumSpec spec;
  spec.order = 6;
  spec.min_degree = 2;
  spec.connected_only = true;
  auto graphs = enumerate_all(spec);
  CHECK(dedup(graphs).size() == graphs.size());
  for (const SmallGraph& g : graphs) {
    CHECK(min_degree(g) >= 2);
    CHECK(is_connected(g));
    CHECK(is_valid(g));
  }
}

TEST_CASE("budget guard") {
  EnumSpec spec;
  spec.order = 13;
  CHECK_THROWS_AS(enumerate_all(spec), std::invalid_argument);
}

TEST_CASE("random samplers") {
  SmallGraph reg = random_regular(13, 6, 7);
  CHECK(min_degree(reg) == 6);
  CHECK(max_degree(reg) == 6);
  CHECK(is_valid(reg));

  CHECK(are_isomorphic(random_regular(4, 3, 1), complete_graph(4)));

  SmallGraph dense = random_graph(13, 43, 2);
  CHECK(dense.size() == 43);
  CHECK(has_k6_minor(dense).has_value());

  // reproducible from the seed
  CHECK(random_graph(10, 20, 99) == random_graph(10, 20, 99));
  CHECK(random_regular(12, 5, 99) == random_regular(12, 5, 99));

  CHECK_THROWS_AS(random_regular(5, 3, 1), std::invalid_argument);  // odd n*d
  CHECK_THROWS_AS(random_graph(4, 7, 1), std::invalid_argument);
}
