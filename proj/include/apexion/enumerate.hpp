#ifndef APEXION_ENUMERATE_HPP
#define APEXION_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "apexion/small_graph.hpp"

namespace apexion {

struct EnumSpec {
  int order = 0;
  int min_size = 0;
  int max_size = -1;  // -1: complete graph size
  int min_degree = 0;
  bool connected_only = false;
};

/// One representative per isomorphism class meeting the spec, emitted in
/// deterministic order (size ascending, canonical key within a size).
/// Exhaustive mode is capped at order 12.
void enumerate_all(const EnumSpec& spec,
                   const std::function<void(const SmallGraph&)>& emit);
std::vector<SmallGraph> enumerate_all(const EnumSpec& spec);

/// Uniform random graph with exactly e edges, reproducible from the seed.
SmallGraph random_graph(int n, int e, std::uint64_t seed);

/// Random d-regular graph: circulant start, then degree-preserving double
/// edge swaps (100 * n * d of them). Not exactly uniform.
SmallGraph random_regular(int n, int d, std::uint64_t seed);

}  // namespace apexion

#endif
