#pragma once

#include "comass/chain.hpp"

#include <optional>

namespace comass {

/// Smith normal form  U * A * V = S  with U, V unimodular and S diagonal,
/// diag entries nonnegative with s_1 | s_2 | ... .
struct SmithForm {
  MatZ u, s, v;
  int rank = 0;  ///< number of nonzero diagonal entries
};

SmithForm smith_normal_form(const MatZ& a);

/// Rank over Q by fraction-free row reduction (independent of SNF).
int rational_rank(const MatZ& a);

/// Homology of x in degree k with Z coefficients: betti number and the
/// torsion coefficients (invariant factors > 1) in divisibility order.
struct HomologyGroup {
  int betti = 0;
  std::vector<Integer> torsion;
};

HomologyGroup homology(const SimplicialComplex& x, int k);

/// Solves A x = b over Z; nullopt when no integer solution exists.
std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b);
/// Same, reusing a precomputed Smith form of A (for repeated right sides).
std::optional<VecZ> solve_integer(const SmithForm& f, const VecZ& b);

/// Solves A x = b over Q; nullopt when inconsistent.
std::optional<VecR> solve_rational(const MatR& a, const VecR& b);

}  // namespace comass
