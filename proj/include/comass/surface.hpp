#pragma once

#include "comass/simplicial_map.hpp"

namespace comass {

/// Throws DomainError unless x is a closed triangulated surface: every
/// edge has exactly two incident triangles and every vertex link is a
/// single cycle.
void check_surface(const SimplicialComplex& x);

/// V - E + F of a 2-complex.
Integer euler_characteristic(const SimplicialComplex& x);

struct SurfaceReport {
  std::vector<int> net;       ///< net vertices, in X's labels
  int tubes = 0;              ///< tube count (including the class tube)
  Integer euler = 0;          ///< chi(Sigma)
  Integer genus = 0;          ///< (2 - chi) / 2
  long long simplex_count = 0;
  long long simplex_budget = 0;  ///< logged poly(|X|, 1/s) cap
};

struct NetSurface {
  SimplicialComplex sigma;        ///< closed orientable surface, edge_scale s/10
  std::map<int, int> vertex_map;  ///< the simplicial map p : Sigma -> X
  SurfaceReport report;
};

/// Net-sphere-and-tube surface mapping to X and hitting the class of h:
/// one small sphere per vertex of an s-net in X, tubes joining net points
/// within 10 s, and (when h != 0) a copy of h's support joined in by a
/// tube.  h must be a 2-cycle whose support is empty or a connected closed
/// orientable surface carried by h with +-1 coefficients.
NetSurface build_net_surface(const SimplicialComplex& x, const Chain& h,
                             const Rational& s);

struct GirthWitness {
  int center = -1;  ///< vertex of X
  int v1 = -1;      ///< vertex pair of Sigma realizing delta
  int v2 = -1;
};

struct GirthReport {
  Rational epsilon = 0;
  bool dense = false;
  Rational delta = 0;
  GirthWitness witness;
};

/// Edge-path-metric girth data of p : Sigma -> X.  dense iff every vertex
/// of X is within eps of the image of Sigma's vertex set; delta is the
/// largest Sigma-diameter of a preimage of a 2 eps ball.  Sigma must be
/// connected.
GirthReport epsilon_girth(const SimplicialMap& p, const Rational& eps);

}  // namespace comass
