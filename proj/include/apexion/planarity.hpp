#ifndef APEXION_PLANARITY_HPP
#define APEXION_PLANARITY_HPP

#include <cstdint>

#include "apexion/small_graph.hpp"

namespace apexion {

/// Planarity decision. Disconnected graphs are planar iff every component is.
bool is_planar(const SmallGraph& g);

/// Independent slow oracle: planar iff neither a K5 minor nor a K3,3 minor
/// exists, decided by the generic minor search. Order capped at 10.
bool planarity_oracle(const SmallGraph& g);

/// Number of is_planar calls so far (process-wide). Lets tests observe
/// short-circuit behavior in the apex classifier.
std::uint64_t planarity_call_count();

}  // namespace apexion

#endif
