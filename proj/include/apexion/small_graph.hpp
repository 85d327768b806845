#ifndef APEXION_SMALL_GRAPH_HPP
#define APEXION_SMALL_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace apexion {

/// Neighbor set of one vertex, one bit per vertex index.
using VertexSet = std::uint32_t;

struct Edge {
  int u = 0;  // u < v
  int v = 0;

  Edge() = default;
  Edge(int a, int b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 31 vertices, adjacency stored as one
/// bitset row per vertex. Value type: all mutating operations return a fresh
/// graph, so instances can be shared freely across threads.
class SmallGraph {
 public:
  static constexpr int kMaxOrder = 31;

  SmallGraph() = default;
  explicit SmallGraph(int order);

  int order() const { return order_; }
  int size() const;

  VertexSet neighbors(int v) const { return adj_[static_cast<unsigned>(v)]; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return std::popcount(adj_[static_cast<unsigned>(v)]); }

  /// Builder entry point; throws on loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<Edge> edges() const;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  void check_vertex(int v) const;

  std::uint8_t order_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

SmallGraph delete_vertex(const SmallGraph& g, int v);
SmallGraph delete_edge(const SmallGraph& g, Edge e);
SmallGraph contract_edge(const SmallGraph& g, Edge e);

/// Relabel: position p of the result holds the vertex perm[p] of g.
SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm);

int min_degree(const SmallGraph& g);
int max_degree(const SmallGraph& g);

/// Degrees sorted non-increasing.
std::vector<int> degree_sequence(const SmallGraph& g);

bool is_connected(const SmallGraph& g);
bool is_2_connected(const SmallGraph& g);

/// Vertices reachable from v (as a bitset), v included.
VertexSet component_of(const SmallGraph& g, int v);

struct Triangle {
  int a, b, c;  // a < b < c
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

std::vector<Triangle> triangles(const SmallGraph& g);
std::vector<int> degree3_vertices(const SmallGraph& g);

/// Checks symmetry, irreflexivity and range of the adjacency rows.
/// Used by tests after every mutation path.
bool is_valid(const SmallGraph& g);

std::string to_edge_list_string(const SmallGraph& g);

}  // namespace apexion

#endif
