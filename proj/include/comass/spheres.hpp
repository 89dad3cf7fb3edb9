#pragma once

#include "comass/chain.hpp"

namespace comass {

/// Boundary of the standard (n+1)-simplex on vertices 0..n+1; the minimal
/// triangulation of S^n, with n+2 facets.
SimplicialComplex boundary_delta(int n);

/// Boundary of the (n+1)-dimensional cross polytope: vertices 0..2n+1 with
/// i and i+n+1 antipodal, one facet per choice of a vertex from each pair
/// (2^{n+1} facets).
SimplicialComplex cross_polytope_sphere(int n);

/// Bipyramid over a 2K-gon: ring vertices 0..2K-1, apexes 2K (top) and
/// 2K+1 (bottom); a triangulated S^2 with 4K triangles.
SimplicialComplex bipyramid(int K);

/// t-fold edgewise subdivision.  Subdivision vertices are identified by
/// their integer barycentric weights, so shared faces subdivide
/// consistently; `vertex_weights` records, per new vertex, the multiset
/// {(original vertex, weight)} with weights summing to t.
struct Subdivision {
  SimplicialComplex complex;
  std::map<int, std::vector<std::pair<int, int>>> vertex_weights;
};

Subdivision edgewise_subdivision(const SimplicialComplex& x, int t);

/// Fundamental cycle of a closed orientable n-pseudomanifold: coefficients
/// +-1, boundary zero, orientation propagated from the first facet (taken
/// with +1 in increasing vertex order).  Throws when x is not a closed
/// pseudomanifold or not orientable.
Chain fundamental_cycle(const SimplicialComplex& x, int n);

}  // namespace comass
