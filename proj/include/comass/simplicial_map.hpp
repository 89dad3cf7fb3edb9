#pragma once

#include "comass/chain.hpp"

namespace comass {

/// Simplicial map, stored as its vertex map.  Simpliciality (images of
/// simplices are simplices of the codomain) is checked on construction.
class SimplicialMap {
 public:
  SimplicialMap(const SimplicialComplex* domain,
                const SimplicialComplex* codomain,
                std::map<int, int> vertex_map);

  const SimplicialComplex& domain() const { return *domain_; }
  const SimplicialComplex& codomain() const { return *codomain_; }
  int apply(int v) const;
  const std::map<int, int>& vertex_map() const { return vertex_map_; }

  /// Image of a simplex, as a sorted vertex set (may be degenerate, i.e.
  /// lower-dimensional than the source).
  Simplex image(const Simplex& s) const;

 private:
  const SimplicialComplex* domain_;
  const SimplicialComplex* codomain_;
  std::map<int, int> vertex_map_;
};

/// Checks simpliciality without constructing (for the certificate verifier:
/// returns false instead of throwing).
bool is_simplicial(const SimplicialComplex& domain,
                   const SimplicialComplex& codomain,
                   const std::map<int, int>& vertex_map);

/// f_# z; degenerate images contribute zero.
Chain pushforward(const SimplicialMap& f, const Chain& z);

/// f^# b, a cochain on the domain of f.
Cochain pullback(const SimplicialMap& f, const Cochain& b);

/// Ordered-simplicial mapping cylinder of f : A -> B.  Domain and codomain
/// keep their own (disjoint) vertex labels inside the cylinder; every
/// cylinder vertex of A is ordered before every vertex of B.
struct MappingCylinder {
  SimplicialComplex complex;
  std::map<int, int> domain_vertex;    ///< A-vertex -> cylinder vertex
  std::map<int, int> codomain_vertex;  ///< B-vertex -> cylinder vertex
  std::map<int, int> retraction;       ///< cylinder vertex -> B-vertex
};

MappingCylinder mapping_cylinder(const SimplicialMap& f);

}  // namespace comass
