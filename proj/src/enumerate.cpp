#include "apexion/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "apexion/canonical.hpp"

namespace apexion {

namespace {

// Extra edges needed before every vertex can reach min_degree. Each added
// edge repairs at most two units of deficiency.
int deficiency_edges(const SmallGraph& g, int min_degree) {
  int deficit = 0;
  for (int v = 0; v < g.order(); ++v)
    deficit += std::max(0, min_degree - g.degree(v));
  return (deficit + 1) / 2;
}

}  // namespace

void enumerate_all(const EnumSpec& spec,
                   const std::function<void(const SmallGraph&)>& emit) {
  const int n = spec.order;
  if (n < 1 || n > 12)
    throw std::invalid_argument("exhaustive enumeration is budgeted for order 1..12");
  const int full = n * (n - 1) / 2;
  const int max_size = spec.max_size < 0 ? full : std::min(spec.max_size, full);
  if (spec.min_size > max_size) return;

  // Level-by-level growth: every (e+1)-edge class arises by adding one edge
  // to some e-edge class, so a per-level canonical set is exhaustive.
  std::unordered_map<std::string, SmallGraph> level;
  SmallGraph empty(n);
  level.emplace(canonical_form(empty).key, empty);
  for (int e = 0; e <= max_size; ++e) {
    if (e >= spec.min_size) {
      std::vector<const std::pair<const std::string, SmallGraph>*> ordered;
      ordered.reserve(level.size());
      for (const auto& entry : level) ordered.push_back(&entry);
      std::sort(ordered.begin(), ordered.end(),
                [](auto* a, auto* b) { return a->first < b->first; });
      for (auto* entry : ordered) {
        const SmallGraph& g = entry->second;
        if (min_degree(g) < spec.min_degree) continue;
        if (spec.connected_only && !is_connected(g)) continue;
        emit(g);
      }
    }
    if (e == max_size) break;
    std::unordered_map<std::string, SmallGraph> next;
    for (const auto& [key, g] : level) {
      if (e + deficiency_edges(g, spec.min_degree) > max_size) continue;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          SmallGraph h = g;
          h.add_edge(u, v);
          CanonicalForm ck = canonical_form(h);
          next.emplace(ck.key, h);
        }
      }
    }
    level = std::move(next);
  }
}

std::vector<SmallGraph> enumerate_all(const EnumSpec& spec) {
  std::vector<SmallGraph> out;
  enumerate_all(spec, [&](const SmallGraph& g) { out.push_back(g); });
  return out;
}

SmallGraph random_graph(int n, int e, std::uint64_t seed) {
  if (n < 1 || n > SmallGraph::kMaxOrder || e < 0 || e > n * (n - 1) / 2)
    throw std::invalid_argument("infeasible random graph parameters");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  SmallGraph g(n);
  for (int i = 0; i < e; ++i) g.add_edge(pairs[static_cast<std::size_t>(i)].first,
                                         pairs[static_cast<std::size_t>(i)].second);
  return g;
}

SmallGraph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || n > SmallGraph::kMaxOrder || d < 0 || d >= n || (n * d) % 2 != 0)
    throw std::invalid_argument("infeasible regular graph parameters");
  SmallGraph g(n);
  for (int off = 1; off <= d / 2; ++off)
    for (int v = 0; v < n; ++v)
      if (!g.has_edge(v, (v + off) % n)) g.add_edge(v, (v + off) % n);
  if (d % 2 == 1)
    for (int v = 0; v < n / 2; ++v) g.add_edge(v, v + n / 2);

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = g.edges();
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  const long swaps = 100L * n * d;
  for (long s = 0; s < swaps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Edge a = edges[i], b = edges[j];
    int va = a.u, vb = a.v, vc = b.u, vd = b.v;
    if (rng() & 1) std::swap(vc, vd);
    if (va == vc || va == vd || vb == vc || vb == vd) continue;
    if (g.has_edge(va, vc) || g.has_edge(vb, vd)) continue;
    g.remove_edge(va, vb);
    g.remove_edge(vc, vd);
    g.add_edge(va, vc);
    g.add_edge(vb, vd);
    edges[i] = Edge(va, vc);
    edges[j] = Edge(vb, vd);
  }
  return g;
}

}  // namespace apexion
