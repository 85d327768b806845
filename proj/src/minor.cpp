#include "apexion/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "apexion/canonical.hpp"
#include "apexion/graph6.hpp"
#include "apexion/named_graphs.hpp"

namespace apexion {

bool check_branch_decomposition(const SmallGraph& host, const SmallGraph& pattern,
                                const BranchDecomposition& d) {
  if (static_cast<int>(d.sets.size()) != pattern.order()) return false;
  VertexSet all = (host.order() == 31) ? ~VertexSet{0}
                                       : ((VertexSet{1} << host.order()) - 1);
  VertexSet used = 0;
  for (VertexSet s : d.sets) {
    if (s == 0 || (s & ~all) || (s & used)) return false;
    used |= s;
    // connectivity of the induced subgraph on s
    VertexSet seen = s & (~s + 1);  // lowest bit
    VertexSet frontier = seen;
    while (frontier) {
      VertexSet next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= host.neighbors(v) & s;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != s) return false;
  }
  for (const Edge& e : pattern.edges()) {
    bool joined = false;
    VertexSet a = d.sets[static_cast<std::size_t>(e.u)];
    VertexSet b = d.sets[static_cast<std::size_t>(e.v)];
    VertexSet bits = a;
    while (bits && !joined) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      if (host.neighbors(v) & b) joined = true;
    }
    if (!joined) return false;
  }
  return true;
}

namespace {

// Assigns pattern vertices (largest degree first) to disjoint connected host
// branch sets, growing each set only until all already-placed pattern
// neighbors are reachable, then growing further on demand. Banned masks make
// every candidate set be enumerated exactly once.
class MinorSearch {
 public:
  MinorSearch(const SmallGraph& host, const SmallGraph& pattern)
      : host_(host), pattern_(pattern) {
    for (int v = 0; v < pattern.order(); ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return pattern.degree(a) > pattern.degree(b);
    });
    for (int v = 0; v < host.order(); ++v) host_order_.push_back(v);
    std::stable_sort(host_order_.begin(), host_order_.end(), [&](int a, int b) {
      return host.degree(a) > host.degree(b);
    });
    sets_.resize(static_cast<std::size_t>(pattern.order()), 0);
    nbrs_.resize(static_cast<std::size_t>(pattern.order()), 0);
    seed_pos_.resize(order_.size(), 0);
    // neighbor positions of each pattern vertex, as bits over order_ indices
    nbr_pos_.resize(static_cast<std::size_t>(pattern.order()), 0);
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (std::size_t j = 0; j < order_.size(); ++j)
        if (pattern.has_edge(order_[i], order_[j]))
          nbr_pos_[static_cast<std::size_t>(order_[i])] |= 1u << j;
    // consecutive interchangeable pattern vertices: their branch sets may be
    // swapped in any solution, so force increasing seed positions
    twin_prev_.assign(order_.size(), false);
    for (std::size_t i = 1; i < order_.size(); ++i) {
      int a = order_[i - 1], b = order_[i];
      VertexSet pair = (VertexSet{1} << a) | (VertexSet{1} << b);
      twin_prev_[i] =
          (pattern.neighbors(a) & ~pair) == (pattern.neighbors(b) & ~pair);
    }
  }

  std::optional<BranchDecomposition> run() {
    if (pattern_.order() > host_.order() || pattern_.size() > host_.size())
      return std::nullopt;
    if (place(0)) return BranchDecomposition{sets_};
    return std::nullopt;
  }

 private:
  bool place(std::size_t idx) {
    if (idx == order_.size()) return true;
    const int remaining = static_cast<int>(order_.size() - idx) - 1;
    const std::size_t start = twin_prev_[idx] ? seed_pos_[idx - 1] + 1 : 0;
    VertexSet banned = 0;
    for (std::size_t pos = start; pos < host_order_.size(); ++pos) {
      VertexSet bit = VertexSet{1} << host_order_[pos];
      if ((used_ | banned) & bit) continue;
      seed_pos_[idx] = pos;
      if (grow(idx, bit, host_.neighbors(host_order_[pos]), banned, remaining))
        return true;
      banned |= bit;
    }
    return false;
  }

  // every placed branch set must keep enough free neighbors to reach all of
  // its not-yet-placed pattern neighbors (future sets are disjoint)
  bool feasible(std::size_t idx) const {
    VertexSet free = ~used_ & host_mask();
    for (std::size_t j = 0; j <= idx; ++j) {
      int pv = order_[j];
      int need = std::popcount(nbr_pos_[static_cast<std::size_t>(pv)] >>
                               (idx + 1));
      if (need == 0) continue;
      if (std::popcount(nbrs_[static_cast<std::size_t>(pv)] & free) < need)
        return false;
    }
    return true;
  }

  // s: current branch set for pattern vertex order_[idx]; ns: its host
  // neighborhood, maintained incrementally.
  bool grow(std::size_t idx, VertexSet s, VertexSet ns, VertexSet banned,
            int remaining) {
    const int pv = order_[idx];
    bool satisfied = true;
    for (std::size_t j = 0; j < idx; ++j) {
      if (!pattern_.has_edge(pv, order_[j])) continue;
      if (!(ns & sets_[static_cast<std::size_t>(order_[j])])) {
        satisfied = false;
        break;
      }
    }
    if (!satisfied) {
      // untouched earlier neighbors must be reachable through what s could
      // still absorb, else no extension of s works
      VertexSet avail = ~used_ & ~banned & host_mask();
      VertexSet reach = s, rn = ns;
      for (VertexSet add; (add = rn & avail & ~reach) != 0;) {
        reach |= add;
        while (add) {
          int v = std::countr_zero(add);
          add &= add - 1;
          rn |= host_.neighbors(v);
        }
      }
      for (std::size_t j = 0; j < idx; ++j) {
        if (!pattern_.has_edge(pv, order_[j])) continue;
        if (!(rn & sets_[static_cast<std::size_t>(order_[j])])) return false;
      }
    }
    if (satisfied) {
      sets_[static_cast<std::size_t>(pv)] = s;
      nbrs_[static_cast<std::size_t>(pv)] = ns;
      used_ |= s;
      if (feasible(idx) && place(idx + 1)) return true;
      used_ &= ~s;
      sets_[static_cast<std::size_t>(pv)] = 0;
    }
    if (std::popcount(~(used_ | s) & host_mask()) <= remaining) return false;
    VertexSet fringe = ns & ~s & ~used_ & ~banned & host_mask();
    while (fringe) {
      int v = std::countr_zero(fringe);
      fringe &= fringe - 1;
      VertexSet bit = VertexSet{1} << v;
      if (grow(idx, s | bit, ns | host_.neighbors(v), banned, remaining))
        return true;
      banned |= bit;
    }
    return false;
  }

  VertexSet host_mask() const {
    return (host_.order() == 31) ? ~VertexSet{0}
                                 : ((VertexSet{1} << host_.order()) - 1);
  }

  const SmallGraph& host_;
  const SmallGraph& pattern_;
  std::vector<int> order_;
  std::vector<int> host_order_;
  std::vector<VertexSet> sets_;
  std::vector<VertexSet> nbrs_;
  std::vector<std::uint32_t> nbr_pos_;
  std::vector<std::size_t> seed_pos_;
  std::vector<bool> twin_prev_;
  VertexSet used_ = 0;
};

}  // namespace

std::optional<BranchDecomposition> has_minor(const SmallGraph& host,
                                             const SmallGraph& pattern) {
  if (!is_connected(pattern))
    throw std::invalid_argument("minor search requires a connected pattern");
  MinorSearch search(host, pattern);
  return search.run();
}

std::optional<BranchDecomposition> has_k6_minor(const SmallGraph& g) {
  static const SmallGraph k6 = complete_graph(6);
  if (g.order() < 6 || g.size() < 15) return std::nullopt;
  if (is_connected(g)) return has_minor(g, k6);
  // A K6 minor of a disconnected graph lies in one component.
  VertexSet handled = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((handled >> v) & 1u) continue;
    VertexSet comp = component_of(g, v);
    handled |= comp;
    if (std::popcount(comp) < 6) continue;
    // restrict to the component, remembering original indices
    std::vector<int> verts;
    VertexSet bits = comp;
    while (bits) {
      verts.push_back(std::countr_zero(bits));
      bits &= bits - 1;
    }
    SmallGraph sub(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b)
        if (g.has_edge(verts[a], verts[b]))
          sub.add_edge(static_cast<int>(a), static_cast<int>(b));
    if (auto found = has_minor(sub, k6)) {
      BranchDecomposition mapped;
      mapped.sets.resize(6, 0);
      for (std::size_t i = 0; i < 6; ++i) {
        VertexSet s = found->sets[i];
        while (s) {
          int local = std::countr_zero(s);
          s &= s - 1;
          mapped.sets[i] |= VertexSet{1} << verts[static_cast<std::size_t>(local)];
        }
      }
      return mapped;
    }
  }
  return std::nullopt;
}

namespace {

bool oracle_impl(const SmallGraph& g, const SmallGraph& pattern,
                 const CanonicalForm& pattern_key,
                 std::unordered_map<std::string, bool>& memo) {
  if (g.order() < pattern.order() || g.size() < pattern.size()) return false;
  CanonicalForm key = canonical_form(g);
  if (auto it = memo.find(key.key); it != memo.end()) return it->second;
  bool found = (key == pattern_key);
  if (!found) {
    for (const Edge& e : g.edges()) {
      if (oracle_impl(delete_edge(g, e), pattern, pattern_key, memo) ||
          oracle_impl(contract_edge(g, e), pattern, pattern_key, memo)) {
        found = true;
        break;
      }
    }
  }
  if (!found && g.order() > pattern.order()) {
    for (int v = 0; v < g.order() && !found; ++v)
      found = oracle_impl(delete_vertex(g, v), pattern, pattern_key, memo);
  }
  memo.emplace(key.key, found);
  return found;
}

}  // namespace

bool minor_oracle(const SmallGraph& host, const SmallGraph& pattern) {
  if (host.order() > 9)
    throw std::invalid_argument("minor oracle capped at host order 9");
  // memo shared per pattern across calls
  static std::unordered_map<std::string, std::unordered_map<std::string, bool>>
      memos;
  CanonicalForm pkey = canonical_form(pattern);
  return oracle_impl(host, pattern, pkey, memos[pkey.key]);
}

}  // namespace apexion
