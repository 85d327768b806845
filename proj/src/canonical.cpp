#include "apexion/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "apexion/graph6.hpp"

namespace apexion {

namespace {

using Cells = std::vector<std::vector<int>>;

// Search for the vertex ordering whose upper-triangle bit string (column
// order, same layout graph6 uses) is lexicographically least. Equitable
// refinement narrows the choices; backtracking individualizes one vertex of
// the first non-singleton cell at a time.
class CanonSearch {
 public:
  explicit CanonSearch(const SmallGraph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Cells start(1);
    start[0].resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) start[0][static_cast<std::size_t>(v)] = v;
    descend(std::move(start));
    return best_labeling_;
  }

 private:
  // Splits cells by per-cell neighbor counts until the partition is equitable.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<VertexSet> masks(cells.size(), 0);
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (int v : cells[i]) masks[i] |= VertexSet{1} << v;
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int v : cell) {
          std::vector<int> sig(masks.size());
          for (std::size_t i = 0; i < masks.size(); ++i)
            sig[i] = std::popcount(g_.neighbors(v) & masks[i]);
          groups[sig].push_back(v);
        }
        if (groups.size() > 1) changed = true;
        for (auto& [sig, members] : groups) next.push_back(std::move(members));
      }
      cells = std::move(next);
    }
  }

  std::vector<std::uint8_t> prefix_bits(const std::vector<int>& lab) const {
    std::vector<std::uint8_t> out;
    const int k = static_cast<int>(lab.size());
    out.reserve(static_cast<std::size_t>(k * (k - 1) / 2));
    for (int q = 1; q < k; ++q)
      for (int p = 0; p < q; ++p)
        out.push_back(g_.has_edge(lab[static_cast<std::size_t>(p)],
                                  lab[static_cast<std::size_t>(q)])
                          ? 1
                          : 0);
    return out;
  }

  void descend(Cells cells) {
    refine(cells);
    std::vector<int> lab;
    for (const auto& cell : cells) {
      if (cell.size() != 1) break;
      lab.push_back(cell[0]);
    }
    const std::size_t k = lab.size();
    auto prefix = prefix_bits(lab);
    if (have_best_) {
      auto cmp = std::lexicographical_compare_three_way(
          prefix.begin(), prefix.end(), best_bits_.begin(),
          best_bits_.begin() + static_cast<std::ptrdiff_t>(prefix.size()));
      if (cmp == std::strong_ordering::greater) return;
    }
    if (static_cast<int>(k) == n_) {
      if (!have_best_ || prefix < best_bits_) {
        best_bits_ = std::move(prefix);
        best_labeling_ = std::move(lab);
        have_best_ = true;
      }
      return;
    }
    const std::vector<int> target = cells[k];
    std::vector<int> tried;
    for (int v : target) {
      // A vertex interchangeable with an already-tried one by a transposition
      // automorphism yields an identical subtree.
      bool dup = false;
      for (int u : tried) {
        VertexSet nu = g_.neighbors(u) & ~(VertexSet{1} << v);
        VertexSet nv = g_.neighbors(v) & ~(VertexSet{1} << u);
        if (nu == nv) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      tried.push_back(v);
      Cells child(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(k));
      child.push_back({v});
      std::vector<int> rest;
      for (int w : target)
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                   cells.end());
      descend(std::move(child));
    }
  }

  const SmallGraph& g_;
  int n_;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_bits_;
  std::vector<int> best_labeling_;
};

}  // namespace

SmallGraph canonical_relabel(const SmallGraph& g) {
  CanonSearch search(g);
  return relabel(g, search.run());
}

CanonicalForm canonical_form(const SmallGraph& g) {
  return CanonicalForm{graph6_encode(canonical_relabel(g))};
}

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<SmallGraph> dedup(const std::vector<SmallGraph>& graphs) {
  CanonicalSet set;
  for (const SmallGraph& g : graphs) set.insert(g);
  return set.sorted_representatives();
}

bool CanonicalSet::insert(const SmallGraph& g) {
  return insert_keyed(canonical_form(g), g);
}

bool CanonicalSet::insert_keyed(const CanonicalForm& key, const SmallGraph& g) {
  return entries_.emplace(key.key, g).second;
}

bool CanonicalSet::contains(const CanonicalForm& key) const {
  return entries_.count(key.key) > 0;
}

void CanonicalSet::merge(CanonicalSet&& other) {
  for (auto& [key, rep] : other.entries_) entries_.emplace(key, rep);
  other.entries_.clear();
}

std::vector<SmallGraph> CanonicalSet::sorted_representatives() const {
  std::vector<const std::pair<const std::string, SmallGraph>*> ptrs;
  ptrs.reserve(entries_.size());
  for (const auto& e : entries_) ptrs.push_back(&e);
  std::sort(ptrs.begin(), ptrs.end(),
            [](auto* a, auto* b) { return a->first < b->first; });
  std::vector<SmallGraph> out;
  out.reserve(ptrs.size());
  for (auto* p : ptrs) out.push_back(p->second);
  return out;
}

std::vector<std::string> CanonicalSet::sorted_keys() const {
  std::vector<std::string> keys;
  keys.reserve(entries_.size());
  for (const auto& e : entries_) keys.push_back(e.first);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace apexion
