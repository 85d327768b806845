#include "apexion/transforms.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

#include "apexion/canonical.hpp"

namespace apexion {

SmallGraph delta_wye(const SmallGraph& g, Triangle t) {
  if (!g.has_edge(t.a, t.b) || !g.has_edge(t.a, t.c) || !g.has_edge(t.b, t.c))
    throw std::invalid_argument("not a triangle of the graph");
  SmallGraph out(g.order() + 1);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  out.remove_edge(t.a, t.b);
  out.remove_edge(t.a, t.c);
  out.remove_edge(t.b, t.c);
  const int w = g.order();
  out.add_edge(w, t.a);
  out.add_edge(w, t.b);
  out.add_edge(w, t.c);
  assert(out.size() == g.size());
  return out;
}

SmallGraph wye_delta(const SmallGraph& g, int v) {
  if (g.degree(v) != 3)
    throw std::invalid_argument("wye-delta requires a degree-3 vertex");
  if (g.order() < 4)
    throw std::invalid_argument("wye-delta would delete the last vertices");
  int nb[3];
  int k = 0;
  VertexSet bits = g.neighbors(v);
  while (bits) {
    nb[k++] = std::countr_zero(bits);
    bits &= bits - 1;
  }
  SmallGraph with_delta = g;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!with_delta.has_edge(nb[i], nb[j])) with_delta.add_edge(nb[i], nb[j]);
  return delete_vertex(with_delta, v);
}

std::vector<SmallGraph> dy_closure(const std::vector<SmallGraph>& seeds,
                                   int order_cap, int size_cap) {
  if (order_cap > SmallGraph::kMaxOrder)
    throw std::invalid_argument("order cap above capacity");
  CanonicalSet visited;
  std::deque<SmallGraph> frontier;
  for (const SmallGraph& g : seeds) {
    if (g.order() > order_cap || g.size() > size_cap) continue;
    if (visited.insert(g)) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    SmallGraph g = frontier.front();
    frontier.pop_front();
    if (g.order() + 1 <= order_cap) {
      for (const Triangle& t : triangles(g)) {
        SmallGraph next = delta_wye(g, t);
        if (next.size() <= size_cap && visited.insert(next))
          frontier.push_back(next);
      }
    }
    if (g.order() >= 4) {
      for (int v : degree3_vertices(g)) {
        SmallGraph next = wye_delta(g, v);
        if (visited.insert(next)) frontier.push_back(next);
      }
    }
  }
  return visited.sorted_representatives();
}

}  // namespace apexion
