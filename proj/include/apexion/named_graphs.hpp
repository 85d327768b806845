#ifndef APEXION_NAMED_GRAPHS_HPP
#define APEXION_NAMED_GRAPHS_HPP

#include "apexion/small_graph.hpp"

namespace apexion {

SmallGraph complete_graph(int n);
SmallGraph complete_bipartite_graph(int a, int b);
SmallGraph path_graph(int n);
SmallGraph cycle_graph(int n);

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
SmallGraph petersen_graph();

/// Triangular prism: triangles 0-1-2 and 3-4-5, matching i -- i+3.
SmallGraph prism_graph();

/// The icosahedral graph: the unique 5-regular planar graph on 12 vertices.
SmallGraph icosahedral_graph();

/// Cone over g: vertex 0 adjacent to every vertex of g (shifted up by one).
SmallGraph cone_over(const SmallGraph& g);

/// K1 * Ic, order 13, 42 edges; the cone vertex is 0.
SmallGraph coned_icosahedron();

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);

}  // namespace apexion

#endif
