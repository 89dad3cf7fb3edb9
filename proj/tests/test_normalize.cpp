#include "doctest.h"

#include "comass/comass.hpp"
#include "comass/normalize.hpp"
#include "comass/spheres.hpp"
#include "helpers.hpp"

#include <random>

using namespace comass;

namespace {

Cochain uniform_cocycle(const SimplicialComplex& x) {
  // value 1 on each facet in the orientation of the fundamental cycle
  Chain fc = fundamental_cycle(x, x.dim());
  Cochain u(x.dim());
  for (const auto& [s, c] : fc.coeffs) u.coeffs[s] = c;  // +-1 entries
  return u;
}

}  // namespace

TEST_CASE("zero cochain is a coboundary") {
  SimplicialComplex x = boundary_delta(2);
  Cochain b = solve_coboundary(x, Cochain(2), 2);
  CHECK(coboundary(x, b).is_zero());
}

TEST_CASE("4 x facet minus uniform is exact on the sphere") {
  SimplicialComplex x = boundary_delta(2);
  Cochain c(2);
  c.coeffs[{0, 1, 2}] = 4;
  c = c - uniform_cocycle(x);
  REQUIRE(pairing(c, fundamental_cycle(x, 2)) == 0);
  Cochain beta = solve_coboundary(x, c, 2);
  CHECK(coboundary(x, beta) == c);
}

TEST_CASE("a single facet is not a coboundary") {
  SimplicialComplex x = boundary_delta(2);
  Cochain c(2);
  c.coeffs[{0, 1, 2}] = 1;
  CHECK_THROWS_AS(solve_coboundary(x, c, 2), NotExact);
}

TEST_CASE("rounding with zhat equal to z is the identity") {
  SimplicialComplex x = boundary_delta(2);
  Cochain z(2);
  z.coeffs[{0, 1, 2}] = 2;
  z.coeffs[{0, 2, 3}] = -1;
  RoundResult r = round_cocycle(x, z, z, 2);
  CHECK(r.rounded == z);
  CHECK(r.integer_shift.is_zero());
}

TEST_CASE("sphere rounding example stays below the bound") {
  SimplicialComplex x = boundary_delta(2);
  Cochain z(2);
  z.coeffs[{0, 1, 2}] = 4;
  Cochain zhat = uniform_cocycle(x);
  // orient zhat to be cohomologous to z: both pair to +-4 with [S]
  Chain fc = fundamental_cycle(x, 2);
  if (pairing(zhat, fc) * pairing(z, fc) < 0) zhat *= Rational(-1);
  zhat *= pairing(z, fc) / pairing(zhat, fc);  // now exactly cohomologous
  CHECK(linf_norm(zhat) == 1);
  RoundResult r = round_cocycle(x, z, zhat, 2);
  CHECK(is_integral(r.rounded));
  CHECK(linf_norm(r.rounded) <= 2);  // integral, so 1 + 3/2 rounds down to 2
  // z' - z is an integral coboundary
  CHECK(is_integral(r.integer_shift));
  CHECK(r.rounded == z - coboundary(x, r.integer_shift));
}

TEST_CASE("non-cohomologous inputs are rejected") {
  SimplicialComplex x = boundary_delta(2);
  Cochain z(2);
  z.coeffs[{0, 1, 2}] = 1;  // pairs to 1 with the fundamental cycle
  CHECK_THROWS_AS(round_cocycle(x, z, Cochain(2), 2), NotExact);
}

TEST_CASE("rounding bound holds along the linf pipeline") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + (trial % 2);
    SimplicialComplex x = testutil::random_complex(rng, n, 8);
    Cochain z = testutil::random_cochain(rng, x, n);
    LinfResult d = linf_min_representative(x, z, n);
    Cochain zhat = z - coboundary(x, d.beta);
    RoundResult r = round_cocycle(x, z, zhat, n);
    CHECK(is_integral(r.rounded));
    CHECK(linf_norm(r.rounded) <= linf_norm(zhat) + Rational(n + 1, 2));
    CHECK(r.rounded == z - coboundary(x, r.integer_shift));
  }
}
