#pragma once

#include "comass/complex.hpp"

#include <Eigen/Dense>

namespace comass {

using MatR = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecR = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/// Formal rational combination of oriented k-simplices.  Coefficients are
/// stored on the increasing-vertex-order orientation; adding a term on a
/// permuted tuple converts by the sign of the permutation.  Zero terms are
/// dropped eagerly, so equality of maps is equality of chains.
struct Chain {
  int degree = 0;
  std::map<Simplex, Rational> coeffs;

  Chain() = default;
  explicit Chain(int k) : degree(k) {}

  /// Adds c on the oriented simplex given by `tuple` (any vertex order).
  void add_term(const Simplex& tuple, const Rational& c);

  Rational coeff(const Simplex& sorted_simplex) const;
  bool is_zero() const { return coeffs.empty(); }

  Chain& operator+=(const Chain& other);
  Chain& operator*=(const Rational& c);
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);
Chain operator*(const Rational& c, Chain z);
bool operator==(const Chain& a, const Chain& b);

/// Cochains share the chain representation; the degree is cohomological.
using Cochain = Chain;

/// Boundary of a chain (no complex needed; faces of simplices in the
/// support are taken formally).
Chain boundary(const Chain& z);

/// Coboundary of a cochain on x; simplices of x of degree+1 are scanned.
Cochain coboundary(const SimplicialComplex& x, const Cochain& b);

/// Kronecker pairing <b, z> of a k-cochain with a k-chain.
Rational pairing(const Cochain& b, const Chain& z);

/// sup-norm of the coefficient vector.
Rational linf_norm(const Cochain& b);
/// l1 norm of the coefficient vector.
Rational l1_norm(const Chain& z);
bool is_integral(const Chain& z);

/// mass(z)^2 = (sum |z_s|)^2 vol_k^2 edge_scale^{2k}, exactly.
Rational mass_sq(const SimplicialComplex& x, const Chain& z);
/// Numeric mass for reporting only.
double mass(const SimplicialComplex& x, const Chain& z);

/// Boundary matrix D_k : C_k -> C_{k-1} over Z in the sorted simplex bases.
MatZ boundary_matrix(const SimplicialComplex& x, int k);

/// Chain from a coefficient vector in the sorted k-simplex basis, and back.
Chain chain_from_vector(const SimplicialComplex& x, int k, const VecR& v);
VecR vector_from_chain(const SimplicialComplex& x, const Chain& z);

}  // namespace comass
