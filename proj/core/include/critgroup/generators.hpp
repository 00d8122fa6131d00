#pragma once

#include "critgroup/simplicial_complex.hpp"

namespace critgroup::gen {

/// Equatorial bipyramid on [5]: facets 123 124 125 134 135 234 235.
SimplicialComplex bipyramid();
/// Cycle graph on vertices 1..n; n >= 3.
SimplicialComplex cycle(int n);
/// Complete graph K_n (the 1-skeleton of the simplex on [n]); n >= 2.
SimplicialComplex complete_graph(int n);
/// k-skeleton of the simplex on [n]; 0 <= k <= n - 1.
SimplicialComplex simplex_skeleton(int n, int k);
/// Boundary of the (d+1)-simplex on [d+2], a d-sphere with d+2 facets; d >= 0.
SimplicialComplex sphere(int d);
/// Six-vertex triangulation of the real projective plane (H_1 = Z/2).
SimplicialComplex projective_plane();

}  // namespace critgroup::gen
