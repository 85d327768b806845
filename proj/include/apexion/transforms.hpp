#ifndef APEXION_TRANSFORMS_HPP
#define APEXION_TRANSFORMS_HPP

#include <vector>

#include "apexion/small_graph.hpp"

namespace apexion {

/// Replace the triangle by a new degree-3 vertex (appended as the last
/// index) adjacent to its three corners. Size is preserved, order grows by 1.
SmallGraph delta_wye(const SmallGraph& g, Triangle t);

/// Inverse move on a degree-3 vertex: delete it and add the triangle on its
/// neighbors. Edges already present collapse, so the size may drop.
SmallGraph wye_delta(const SmallGraph& g, int v);

/// Closure of the seeds under both moves, deduped by canonical form and
/// bounded by the caps. Output sorted by canonical key.
std::vector<SmallGraph> dy_closure(const std::vector<SmallGraph>& seeds,
                                   int order_cap = SmallGraph::kMaxOrder,
                                   int size_cap = 465);

}  // namespace apexion

#endif
