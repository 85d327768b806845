#include "apexion/named_graphs.hpp"

namespace apexion {

SmallGraph complete_graph(int n) {
  SmallGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SmallGraph complete_bipartite_graph(int a, int b) {
  SmallGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

SmallGraph path_graph(int n) {
  SmallGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SmallGraph cycle_graph(int n) {
  SmallGraph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

SmallGraph petersen_graph() {
  SmallGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, i + 5);                // spokes
  }
  return g;
}

SmallGraph prism_graph() {
  SmallGraph g(6);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(3 + i, 3 + (i + 1) % 3);
    g.add_edge(i, i + 3);
  }
  return g;
}

SmallGraph icosahedral_graph() {
  // 0 apex, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  SmallGraph g(12);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(11, 6 + i);
    g.add_edge(1 + i, 1 + (i + 1) % 5);
    g.add_edge(6 + i, 6 + (i + 1) % 5);
    g.add_edge(1 + i, 6 + i);
    g.add_edge(1 + i, 6 + (i + 1) % 5);
  }
  return g;
}

SmallGraph cone_over(const SmallGraph& g) {
  SmallGraph out(g.order() + 1);
  for (int v = 0; v < g.order(); ++v) out.add_edge(0, v + 1);
  for (const Edge& e : g.edges()) out.add_edge(e.u + 1, e.v + 1);
  return out;
}

SmallGraph coned_icosahedron() { return cone_over(icosahedral_graph()); }

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
  SmallGraph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(a.order() + e.u, a.order() + e.v);
  return out;
}

}  // namespace apexion
