#pragma once

#include "comass/complex.hpp"

namespace comass {

/// Greedy free-face collapse.  Removes free pairs (sigma, tau) until none
/// remain; the result is homotopy equivalent to x, so homology computations
/// may run on it instead.  Deterministic (smallest free face first).
SimplicialComplex collapse(const SimplicialComplex& x);

}  // namespace comass
