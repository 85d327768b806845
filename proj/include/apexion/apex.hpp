#ifndef APEXION_APEX_HPP
#define APEXION_APEX_HPP

#include <optional>

#include "apexion/small_graph.hpp"

namespace apexion {

enum class ApexKind { Planar, Apex, NonApex };

struct ApexVerdict {
  ApexKind kind;
  std::optional<int> witness;  // set iff kind == Apex; smallest qualifying index

  bool non_apex() const { return kind == ApexKind::NonApex; }
};

/// Planar graphs short-circuit; otherwise vertices are probed in ascending
/// index until one deletion is planar.
ApexVerdict classify_apex(const SmallGraph& g);

/// All vertices whose deletion planarizes g. Rejects planar input.
VertexSet apex_vertices(const SmallGraph& g);

}  // namespace apexion

#endif
