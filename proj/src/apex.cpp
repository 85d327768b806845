#include "apexion/apex.hpp"

#include <stdexcept>

#include "apexion/planarity.hpp"

namespace apexion {

ApexVerdict classify_apex(const SmallGraph& g) {
  if (is_planar(g)) return {ApexKind::Planar, std::nullopt};
  if (g.order() >= 2) {
    for (int v = 0; v < g.order(); ++v)
      if (is_planar(delete_vertex(g, v))) return {ApexKind::Apex, v};
  }
  return {ApexKind::NonApex, std::nullopt};
}

VertexSet apex_vertices(const SmallGraph& g) {
  if (is_planar(g))
    throw std::invalid_argument("apex_vertices is defined for nonplanar input");
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (is_planar(delete_vertex(g, v))) out |= VertexSet{1} << v;
  return out;
}

}  // namespace apexion
