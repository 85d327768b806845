#include "apexion/mmna.hpp"

#include <unordered_set>

#include "apexion/apex.hpp"
#include "apexion/canonical.hpp"
#include "apexion/parallel.hpp"

namespace apexion {

std::vector<SmallGraph> one_edge_deletions(const SmallGraph& g) {
  std::vector<SmallGraph> out;
  for (const Edge& e : g.edges()) out.push_back(delete_edge(g, e));
  return out;
}

std::vector<SmallGraph> one_edge_contractions(const SmallGraph& g) {
  std::vector<SmallGraph> out;
  for (const Edge& e : g.edges()) out.push_back(contract_edge(g, e));
  return out;
}

namespace {

// Scans one-step minors in edge order; returns the first edge whose minor is
// still non-apex, testing each isomorphism class once when deduping.
std::optional<Edge> first_non_apex_minor(const SmallGraph& g, bool contraction,
                                         bool dedup_minors) {
  std::unordered_set<std::string> seen;
  for (const Edge& e : g.edges()) {
    SmallGraph minor = contraction ? contract_edge(g, e) : delete_edge(g, e);
    if (dedup_minors && !seen.insert(canonical_form(minor).key).second) continue;
    if (classify_apex(minor).non_apex()) return e;
  }
  return std::nullopt;
}

}  // namespace

MmnaVerdict is_mmna(const SmallGraph& g, bool dedup_minors) {
  if (!classify_apex(g).non_apex()) return {MmnaKind::NotNonApex, std::nullopt};
  if (auto e = first_non_apex_minor(g, /*contraction=*/false, dedup_minors))
    return {MmnaKind::FailsDeletion, MmnaCounterexample{false, *e}};
  if (auto e = first_non_apex_minor(g, /*contraction=*/true, dedup_minors))
    return {MmnaKind::FailsContraction, MmnaCounterexample{true, *e}};
  return {MmnaKind::Mmna, std::nullopt};
}

MmnaPartition mmna_filter(const std::vector<SmallGraph>& graphs, int threads) {
  std::vector<char> verdicts(graphs.size(), 0);
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    verdicts[i] = is_mmna(graphs[i]).is_mmna() ? 1 : 0;
  });
  MmnaPartition out;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    (verdicts[i] ? out.mmna : out.not_mmna).push_back(graphs[i]);
  return out;
}

}  // namespace apexion
