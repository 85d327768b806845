#ifndef APEXION_MMNA_HPP
#define APEXION_MMNA_HPP

#include <optional>
#include <vector>

#include "apexion/small_graph.hpp"

namespace apexion {

enum class MmnaKind { NotNonApex, FailsDeletion, FailsContraction, Mmna };

struct MmnaCounterexample {
  bool contraction;  // false: deletion
  Edge edge;
};

struct MmnaVerdict {
  MmnaKind kind;
  std::optional<MmnaCounterexample> counterexample;

  bool is_mmna() const { return kind == MmnaKind::Mmna; }
};

/// One-step minors, one per edge, in lexicographic edge order.
std::vector<SmallGraph> one_edge_deletions(const SmallGraph& g);
std::vector<SmallGraph> one_edge_contractions(const SmallGraph& g);

/// Non-apexness is re-verified first; deletions are checked before
/// contractions; the first counterexample in edge order is reported.
/// With dedup_minors, isomorphic one-step minors are apex-tested once.
MmnaVerdict is_mmna(const SmallGraph& g, bool dedup_minors = true);

struct MmnaPartition {
  std::vector<SmallGraph> mmna;
  std::vector<SmallGraph> not_mmna;
};

MmnaPartition mmna_filter(const std::vector<SmallGraph>& graphs, int threads = 1);

}  // namespace apexion

#endif
