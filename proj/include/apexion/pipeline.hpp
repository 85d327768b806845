#ifndef APEXION_PIPELINE_HPP
#define APEXION_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "apexion/small_graph.hpp"

namespace apexion {

/// Sparse (order, size) -> count matrix, the shape of the published
/// obstruction tables.
class CountTable {
 public:
  void add(const SmallGraph& g) { ++cells_[{g.order(), g.size()}]; }

  const std::map<std::pair<int, int>, std::uint64_t>& cells() const {
    return cells_;
  }
  std::uint64_t total() const;

  std::string to_text() const;
  /// CSV with header "n,e,count", LF line endings.
  std::string to_csv() const;

 private:
  std::map<std::pair<int, int>, std::uint64_t> cells_;
};

CountTable count_table(const std::vector<SmallGraph>& graphs);

struct ClassifyResult {
  std::vector<SmallGraph> planar;
  std::vector<SmallGraph> apex;
  std::vector<SmallGraph> nonapex;
};

ClassifyResult classify_graphs(const std::vector<SmallGraph>& graphs,
                               int threads = 1);

struct CascadeConfig {
  int min_degree = 3;
  bool connected_only = false;
  int max_depth = -1;  // -1: run to the fixed point
  int threads = 1;
  std::string checkpoint_dir;  // empty: no per-depth frontier checkpoints
};

struct CascadeResult {
  std::vector<SmallGraph> mmna;  // deduped, sorted by canonical key
  CountTable table;
  int depth_reached = 0;
  bool complete = true;  // false when max_depth cut the search short
};

/// Edge-deletion search: every non-apex graph reachable from the seeds by
/// repeated single-edge deletion (min-degree and connectivity filters
/// applied, isomorphic duplicates removed) is MMNA-tested.
CascadeResult cascade(const std::vector<SmallGraph>& seeds,
                      const CascadeConfig& config = {});

struct K6AuditResult {
  int sampled = 0;
  int with_minor = 0;
  std::vector<SmallGraph> counterexamples;  // expected empty
};

/// Samples random 6-regular 2-connected order-13 graphs and checks each for
/// a K6 minor (witnesses validated).
K6AuditResult k6_audit(int count, std::uint64_t seed);

}  // namespace apexion

#endif
