#pragma once

#include "comass/chain.hpp"
#include "comass/lp.hpp"

namespace comass {

/// Exact comass value  coeff * vol_n^{-1}  (coeff rational, vol_n the unit
/// equilateral n-simplex volume).  Kept symbolic so equalities and
/// comparisons against rationals stay exact.
struct ComassValue {
  Rational coeff = 0;
  int n = 0;

  double numeric() const { return static_cast<double>(coeff) / simplex_volume(n); }

  /// Exact test  coeff / vol_n <= c  (both sides nonnegative).
  bool leq(const Rational& c) const {
    return coeff * coeff <= c * c * simplex_volume_sq(n);
  }
  bool lt(const Rational& c) const {
    return coeff * coeff < c * c * simplex_volume_sq(n);
  }
};

inline bool operator==(const ComassValue& a, const ComassValue& b) {
  return a.n == b.n && a.coeff == b.coeff;
}
inline bool operator<(const ComassValue& a, const ComassValue& b) {
  if (a.n != b.n) throw DomainError("comass values of different degree");
  return a.coeff < b.coeff;
}

struct ComassResult {
  ComassValue value;
  /// Optimal cycle scaled so that l1(witness) = 1; the true mass-one
  /// witness is witness / (vol_n edge^n).  Zero when the comass is zero.
  Chain witness;
};

/// Simplicial comass of an n-cochain b on x: the LP
///   maximize <b, z>  over n-cycles z with mass(z) <= 1.
ComassResult simplicial_comass(const SimplicialComplex& x, const Cochain& b,
                               int n);

struct LinfResult {
  Rational value = 0;  ///< min over beta of linf(b - d beta)
  Cochain beta;        ///< an optimal (n-1)-cochain
};

/// LP-dual description of the comass:
///   vol_n * edge^n * comass(b) = min_beta linf(b - d beta).
LinfResult linf_min_representative(const SimplicialComplex& x,
                                   const Cochain& b, int n);

}  // namespace comass
