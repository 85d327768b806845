#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>

#include "apexion/canonical.hpp"
#include "apexion/graph6.hpp"
#include "apexion/mmna.hpp"
#include "apexion/named_graphs.hpp"
#include "apexion/pipeline.hpp"
#include "apexion/transforms.hpp"
#include "test_util.hpp"

using namespace apexion;

TEST_CASE("classify") {
  ClassifyResult r = classify_graphs(
      {complete_graph(4), complete_graph(5), complete_graph(6)});
  CHECK(r.planar.size() == 1);
  CHECK(r.apex.size() == 1);
  CHECK(r.nonapex.size() == 1);

  CHECK(classify_graphs({}).planar.empty());

  ClassifyResult family = classify_graphs(dy_closure({complete_graph(6)}));
  CHECK(family.nonapex.size() == 7);
}

TEST_CASE("count table") {
  CountTable t = count_table(dy_closure({complete_graph(6)}));
  const auto& cells = t.cells();
  CHECK(cells.at({6, 15}) == 1);
  CHECK(cells.at({7, 15}) == 2);
  CHECK(cells.at({8, 15}) == 2);
  CHECK(cells.at({9, 15}) == 1);
  CHECK(cells.at({10, 15}) == 1);
  CHECK(t.total() == 7);

  CHECK(count_table({}).cells().empty());
  // dedup folds relabelings into one cell
  SmallGraph k6 = complete_graph(6);
  CountTable two = count_table({k6, test::random_relabeling(k6, 5)});
  CHECK(two.cells().at({6, 15}) == 1);

  CHECK(two.to_csv().rfind("n,e,count\n", 0) == 0);
}

TEST_CASE("cascade on K6") {
  CascadeResult r = cascade({complete_graph(6)});
  REQUIRE(r.mmna.size() == 1);
  CHECK(are_isomorphic(r.mmna[0], complete_graph(6)));
  CHECK(r.complete);
}

TEST_CASE("cascade on the Petersen family returns exactly the inputs") {
  auto family = dy_closure({complete_graph(6)});
  CascadeResult r = cascade(family);
  CHECK(r.mmna.size() == 7);
  for (const SmallGraph& g : r.mmna) CHECK(is_mmna(g).is_mmna());
}

TEST_CASE("cascade reproducibility across worker counts") {
  auto family = dy_closure({complete_graph(6)});
  CascadeConfig one, four;
  four.threads = 4;
  auto keys = [](const CascadeResult& r) {
    std::vector<std::string> ks;
    for (const SmallGraph& g : r.mmna) ks.push_back(graph6_encode(g));
    return ks;
  };
  CHECK(keys(cascade(family, one)) == keys(cascade(family, four)));
}

TEST_CASE("cascade depth budget reports incomplete") {
  // K7 needs several deletion rounds to bottom out
  CascadeConfig budget;
  budget.max_depth = 0;
  CascadeResult r = cascade({complete_graph(7)}, budget);
  CHECK_FALSE(r.complete);
}

TEST_CASE("cascade checkpoints frontiers") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "apexion_ckpt_test";
  fs::remove_all(dir);
  CascadeConfig config;
  config.checkpoint_dir = dir.string();
  cascade({complete_graph(6)}, config);
  CHECK(fs::exists(dir / "frontier_depth0.g6"));
  fs::remove_all(dir);
}

TEST_CASE("k6 audit sample") {
  K6AuditResult r = k6_audit(5, 12345);
  CHECK(r.sampled == 5);
  CHECK(r.with_minor == 5);
  CHECK(r.counterexamples.empty());
  CHECK_THROWS_AS(k6_audit(0, 1), std::invalid_argument);
}
