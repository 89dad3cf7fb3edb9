#pragma once

#include "comass/chain.hpp"

namespace comass {

/// Raised when a cochain is not an exact coboundary; carries the residual
/// left after projecting onto the image of d.
struct NotExact : DomainError {
  Cochain residual;
  explicit NotExact(Cochain r)
      : DomainError("cochain is not a coboundary"), residual(std::move(r)) {}
};

/// Solves d beta = c over Q for an (n-1)-cochain beta, n = c's degree.
/// Throws NotExact when no solution exists.
Cochain solve_coboundary(const SimplicialComplex& x, const Cochain& c, int n);

struct RoundResult {
  Cochain rounded;        ///< z' = z - d(nearest_int(beta)), integral cocycle
  Cochain integer_shift;  ///< nearest_int(beta), an integral (n-1)-cochain
};

/// Normalization step: given cohomologous n-cocycles z (integral) and zhat
/// (rational), writes z - zhat = d beta, rounds beta to the nearest integer
/// cochain (ties toward zero) and returns z' = z - d(round(beta)).  Then
///   linf(z') <= linf(zhat) + (n+1)/2.
RoundResult round_cocycle(const SimplicialComplex& x, const Cochain& z,
                          const Cochain& zhat, int n);

}  // namespace comass
