#pragma once

#include "comass/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace comass {

/// A simplex is a strictly increasing tuple of nonnegative vertex labels.
using Simplex = std::vector<int>;

/// Finite abstract simplicial complex with the standard simplexwise metric.
/// Simplices are stored face-closed, sorted, and deduplicated; `edge_scale`
/// is the metric edge length (default 1).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int dim() const { return static_cast<int>(simplices_.size()) - 1; }
  const std::vector<Simplex>& simplices(int k) const;
  int count(int k) const;

  bool contains(const Simplex& s) const;
  /// Index of s within simplices(k); throws if absent.
  int index_of(const Simplex& s) const;

  const std::vector<int>& vertices() const { return vertices_; }
  const Rational& edge_scale() const { return edge_scale_; }
  void set_edge_scale(const Rational& r);

  /// All simplices of each dimension, grouped; simplices_[k] is sorted.
  const std::vector<std::vector<Simplex>>& all() const { return simplices_; }

  /// Total number of simplices over all dimensions.
  std::size_t size() const;

  /// Builds the face closure of `maximal` and validates all invariants.
  /// `dim_hint`, when nonnegative, must match the resulting dimension.
  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal,
                                        int dim_hint = -1);

 private:
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, int>> index_;
  std::vector<int> vertices_;
  Rational edge_scale_ = 1;

  void rebuild_index();
  friend SimplicialComplex disjoint_union(const SimplicialComplex&,
                                          const SimplicialComplex&);
};

/// Spec entry point: face closure + invariant validation.
SimplicialComplex validate_complex(const std::vector<Simplex>& maximal,
                                   int dim_hint = -1);

/// Faces of a simplex (codimension one), in the order of the omitted vertex.
std::vector<Simplex> facets_of(const Simplex& s);

SimplicialComplex disjoint_union(const SimplicialComplex& a,
                                 const SimplicialComplex& b);

/// Relabels vertices via the (total) map given; labels must stay distinct.
SimplicialComplex relabel(const SimplicialComplex& x,
                          const std::map<int, int>& vmap);

}  // namespace comass
