#ifndef APEXION_MINOR_HPP
#define APEXION_MINOR_HPP

#include <optional>
#include <vector>

#include "apexion/small_graph.hpp"

namespace apexion {

/// Minor witness: one host vertex set per pattern vertex. Sets are disjoint,
/// each induces a connected subgraph, and every pattern edge is realized by
/// a host edge between the corresponding sets.
struct BranchDecomposition {
  std::vector<VertexSet> sets;  // indexed by pattern vertex
};

/// Validates the witness invariants against host and pattern.
bool check_branch_decomposition(const SmallGraph& host, const SmallGraph& pattern,
                                const BranchDecomposition& d);

/// Branch-and-bound search for a pattern minor in the host. The pattern must
/// be connected. Deterministic: host vertices are tried in descending degree
/// so witnesses are reproducible.
std::optional<BranchDecomposition> has_minor(const SmallGraph& host,
                                             const SmallGraph& pattern);

std::optional<BranchDecomposition> has_k6_minor(const SmallGraph& g);

/// Slow independent oracle: recursive delete/contract definition, memoized on
/// canonical forms. Host order capped at 9.
bool minor_oracle(const SmallGraph& host, const SmallGraph& pattern);

}  // namespace apexion

#endif
