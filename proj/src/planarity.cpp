#include "apexion/planarity.hpp"

#include <atomic>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "apexion/minor.hpp"
#include "apexion/named_graphs.hpp"

namespace apexion {

namespace {
std::atomic<std::uint64_t> call_count{0};
}

std::uint64_t planarity_call_count() { return call_count.load(); }

bool is_planar(const SmallGraph& g) {
  call_count.fetch_add(1, std::memory_order_relaxed);
  const int n = g.order();
  const int e = g.size();
  if (n <= 4) return true;
  if (e > 3 * n - 6) return false;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& edge : g.edges())
    boost::add_edge(static_cast<std::size_t>(edge.u),
                    static_cast<std::size_t>(edge.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool planarity_oracle(const SmallGraph& g) {
  if (g.order() > 10)
    throw std::invalid_argument("planarity oracle capped at order 10");
  return !has_minor(g, complete_graph(5)) &&
         !has_minor(g, complete_bipartite_graph(3, 3));
}

}  // namespace apexion
