#pragma once

#include "comass/simplicial_map.hpp"

#include <string>

namespace comass {

/// Model sphere S^n_t: cross-polytope boundary, edgewise subdivided t
/// times; 2^{n+1} t^n facets, edge_scale 1/t.
SimplicialComplex model_sphere(int n, int t);

/// facet count of S^n_t
long long model_sphere_facets(int n, int t);

/// Dual cocycle of the first facet: pairs to 1 with the fundamental cycle.
Cochain fundamental_cocycle(const SimplicialComplex& sphere, int n);

/// Certificate that a map class has Lipschitz constant at most s/t.
struct CertBundle {
  SimplicialComplex domain;    ///< a subdivision X_s
  SimplicialComplex codomain;  ///< model sphere S^n_t
  std::map<int, int> vertex_map;
  int s = 1;
  int t = 1;
};

struct LipBounds {
  double lower = 0;
  double upper = 0;
};

/// surface volume of the unit n-sphere: 2 pi^{(n+1)/2} / Gamma((n+1)/2)
double sphere_volume(int n);

/// Two-sided Lipschitz bounds from the comass, up to an unspecified
/// dimensional constant:
/// lower = (vol(S^n) c)^{1/n}, upper = C_upper (c^{1/n} + 1).
LipBounds lip_bounds_from_comass(double c, int n, double c_upper = 1.0);

struct AbsoluteLowerBound {
  double value = 0;  ///< 1/t_star
  int t_star = 1;
  long long domain_count = 0;  ///< n-simplices of X at max subdivision
  long long model_count = 0;   ///< facets of S^n_{t_star}
};

/// Counting bound: the least t at which S^n_t out-counts X's n-simplices
/// under the configured maximal domain subdivision.
AbsoluteLowerBound absolute_lower_bound(const SimplicialComplex& x, int n,
                                        int max_subdivision = 1);

struct VerifyResult {
  bool accepted = false;
  Rational bound = 0;  ///< s/t on acceptance
  std::string reason;  ///< "non-simplicial" or "class-mismatch" on rejection
};

/// Accepts iff the vertex map is simplicial and the pullback of `target`'s
/// codomain fundamental cocycle differs from `target` by an integral
/// coboundary on the domain.
VerifyResult verify_certificate(const CertBundle& cert, const Cochain& target,
                                int n);

}  // namespace comass
