#ifndef APEXION_CANONICAL_HPP
#define APEXION_CANONICAL_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "apexion/small_graph.hpp"

namespace apexion {

/// Isomorphism-invariant key: the graph6 encoding of the canonically
/// relabeled graph. Equal keys iff the graphs are isomorphic.
struct CanonicalForm {
  std::string key;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical labeling by equitable refinement plus backtracking over the
/// remaining cells, choosing the lexicographically least upper-triangle
/// bit string. Deterministic across runs and platforms.
CanonicalForm canonical_form(const SmallGraph& g);

/// The canonically relabeled graph itself (decode of the key).
SmallGraph canonical_relabel(const SmallGraph& g);

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b);

/// One first-seen representative per isomorphism class, output sorted by key.
std::vector<SmallGraph> dedup(const std::vector<SmallGraph>& graphs);

/// Mergeable keyed set for pipeline-scale dedup: worker shards insert
/// locally, shards merge, representatives come out sorted by key.
class CanonicalSet {
 public:
  /// Returns true if the class was new.
  bool insert(const SmallGraph& g);
  bool insert_keyed(const CanonicalForm& key, const SmallGraph& g);
  bool contains(const CanonicalForm& key) const;
  std::size_t count() const { return entries_.size(); }

  void merge(CanonicalSet&& other);
  std::vector<SmallGraph> sorted_representatives() const;
  std::vector<std::string> sorted_keys() const;

 private:
  std::unordered_map<std::string, SmallGraph> entries_;
};

}  // namespace apexion

#endif
