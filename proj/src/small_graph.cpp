#include "apexion/small_graph.hpp"

#include <sstream>
#include <stdexcept>
#include <algorithm>

namespace apexion {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
}

SmallGraph::SmallGraph(int order) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("graph order must be in 1..31");
  order_ = static_cast<std::uint8_t>(order);
}

void SmallGraph::check_vertex(int v) const {
  if (v < 0 || v >= order_) throw std::out_of_range("vertex index out of range");
}

int SmallGraph::size() const {
  int twice = 0;
  for (int i = 0; i < order_; ++i) twice += std::popcount(adj_[i]);
  return twice / 2;
}

bool SmallGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

void SmallGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not representable");
  adj_[u] |= VertexSet{1} << v;
  adj_[v] |= VertexSet{1} << u;
}

void SmallGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(VertexSet{1} << v);
  adj_[v] &= ~(VertexSet{1} << u);
}

std::vector<Edge> SmallGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int u = 0; u < order_; ++u) {
    VertexSet higher = adj_[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

SmallGraph delete_vertex(const SmallGraph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex index out of range");
  if (g.order() < 2)
    throw std::invalid_argument("cannot delete the last vertex");
  SmallGraph out(g.order() - 1);
  auto shift = [v](int w) { return w > v ? w - 1 : w; };
  for (int u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    VertexSet row = g.neighbors(u) & ~(VertexSet{1} << v);
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      if (shift(u) < shift(w)) out.add_edge(shift(u), shift(w));
    }
  }
  return out;
}

SmallGraph delete_edge(const SmallGraph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("edge not present");
  SmallGraph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

// Merged vertex takes index min(u,v); indices above max(u,v) shift down.
// Parallel edges collapse because adjacency rows are sets.
SmallGraph contract_edge(const SmallGraph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("edge not present");
  const int keep = e.u, gone = e.v;
  SmallGraph out(g.order() - 1);
  auto map = [keep, gone](int w) {
    if (w == gone) return keep;
    return w > gone ? w - 1 : w;
  };
  for (const Edge& f : g.edges()) {
    int a = map(f.u), b = map(f.v);
    if (a != b) out.add_edge(a, b);
  }
  return out;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation length must equal order");
  std::vector<int> inverse(perm.size(), -1);
  for (std::size_t p = 0; p < perm.size(); ++p) {
    int v = perm[p];
    if (v < 0 || v >= g.order() || inverse[v] != -1)
      throw std::invalid_argument("not a permutation of the vertex set");
    inverse[v] = static_cast<int>(p);
  }
  SmallGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(inverse[e.u], inverse[e.v]);
  return out;
}

int min_degree(const SmallGraph& g) {
  int m = SmallGraph::kMaxOrder;
  for (int v = 0; v < g.order(); ++v) m = std::min(m, g.degree(v));
  return m;
}

int max_degree(const SmallGraph& g) {
  int m = 0;
  for (int v = 0; v < g.order(); ++v) m = std::max(m, g.degree(v));
  return m;
}

std::vector<int> degree_sequence(const SmallGraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

VertexSet component_of(const SmallGraph& g, int v) {
  VertexSet seen = VertexSet{1} << v;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(u);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool is_connected(const SmallGraph& g) {
  VertexSet all = (g.order() == 31) ? ~VertexSet{0} : ((VertexSet{1} << g.order()) - 1);
  return component_of(g, 0) == all;
}

bool is_2_connected(const SmallGraph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!is_connected(delete_vertex(g, v))) return false;
  return true;
}

std::vector<Triangle> triangles(const SmallGraph& g) {
  std::vector<Triangle> out;
  for (int a = 0; a < g.order(); ++a) {
    VertexSet nb_a = g.neighbors(a) >> (a + 1) << (a + 1);
    VertexSet bs = nb_a;
    while (bs) {
      int b = std::countr_zero(bs);
      bs &= bs - 1;
      VertexSet cs = nb_a & g.neighbors(b);
      cs = cs >> (b + 1) << (b + 1);
      while (cs) {
        int c = std::countr_zero(cs);
        cs &= cs - 1;
        out.push_back(Triangle{a, b, c});
      }
    }
  }
  return out;
}

std::vector<int> degree3_vertices(const SmallGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) out.push_back(v);
  return out;
}

bool is_valid(const SmallGraph& g) {
  if (g.order() < 1 || g.order() > SmallGraph::kMaxOrder) return false;
  VertexSet all = (g.order() == 31) ? ~VertexSet{0} : ((VertexSet{1} << g.order()) - 1);
  for (int u = 0; u < g.order(); ++u) {
    VertexSet row = g.neighbors(u);
    if (row & ~all) return false;
    if ((row >> u) & 1u) return false;
    VertexSet bits = row;
    while (bits) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      if (!((g.neighbors(v) >> u) & 1u)) return false;
    }
  }
  return true;
}

std::string to_edge_list_string(const SmallGraph& g) {
  std::ostringstream os;
  os << g.order() << ':';
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? " " : " ") << e.u << '-' << e.v;
    first = false;
  }
  return os.str();
}

}  // namespace apexion
