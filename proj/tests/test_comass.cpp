#include "doctest.h"

#include "comass/comass.hpp"
#include "comass/spheres.hpp"
#include "helpers.hpp"

#include <random>

using namespace comass;

TEST_CASE("zero cochain has zero comass") {
  SimplicialComplex x = boundary_delta(2);
  ComassResult r = simplicial_comass(x, Cochain(2), 2);
  CHECK(r.value.coeff == 0);
  CHECK(r.witness.is_zero());
}

TEST_CASE("single-facet indicator on the 2-sphere") {
  SimplicialComplex x = boundary_delta(2);
  Cochain b(2);
  b.coeffs[{0, 1, 2}] = 1;
  ComassResult r = simplicial_comass(x, b, 2);
  // value 1/sqrt(3), i.e. (1/4) / vol_2
  CHECK(r.value.coeff == Rational(1, 4));
  CHECK(r.value.n == 2);
  // witness: a cycle of l1 norm 1 pairing to the value
  CHECK(boundary(r.witness).is_zero());
  CHECK(l1_norm(r.witness) == 1);
  CHECK(pairing(b, r.witness) == Rational(1, 4));
  // and it is the fundamental cycle scaled by 1/4
  Chain fc = fundamental_cycle(x, 2);
  CHECK((r.witness == Rational(1, 4) * fc ||
         r.witness == Rational(-1, 4) * fc));
}

TEST_CASE("coboundaries have zero comass") {
  std::mt19937 rng(51);
  SimplicialComplex x = boundary_delta(2);
  Cochain beta = testutil::random_cochain(rng, x, 1);
  Cochain b = coboundary(x, beta);
  CHECK(simplicial_comass(x, b, 2).value.coeff == 0);
}

TEST_CASE("dual linf representative on the 2-sphere") {
  SimplicialComplex x = boundary_delta(2);
  Cochain b(2);
  b.coeffs[{0, 1, 2}] = 1;
  LinfResult d = linf_min_representative(x, b, 2);
  CHECK(d.value == Rational(1, 4));
  // the representative b - d beta is uniform +-1/4
  Cochain zhat = b - coboundary(x, d.beta);
  for (const Simplex& s : x.simplices(2)) {
    Rational c = zhat.coeff(s);
    CHECK((c == Rational(1, 4) || c == Rational(-1, 4)));
  }
}

TEST_CASE("exact duality on random complexes") {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 12; ++trial) {
    int dim = 2 + (trial % 2);
    SimplicialComplex x = testutil::random_complex(rng, dim, 8);
    Cochain b = testutil::random_cochain(rng, x, dim);
    ComassResult c = simplicial_comass(x, b, dim);
    LinfResult d = linf_min_representative(x, b, dim);
    CHECK(c.value.coeff == d.value);  // edge_scale is 1 here
  }
}

TEST_CASE("comass is a class invariant") {
  std::mt19937 rng(53);
  SimplicialComplex x = boundary_delta(2);
  Cochain b = testutil::random_cochain(rng, x, 2);
  for (int trial = 0; trial < 5; ++trial) {
    Cochain beta = testutil::random_cochain(rng, x, 1);
    CHECK(simplicial_comass(x, b + coboundary(x, beta), 2).value ==
          simplicial_comass(x, b, 2).value);
  }
}

TEST_CASE("homogeneity and subadditivity") {
  std::mt19937 rng(54);
  SimplicialComplex x = testutil::random_complex(rng, 2, 6);
  Cochain b1 = testutil::random_cochain(rng, x, 2);
  Cochain b2 = testutil::random_cochain(rng, x, 2);
  Rational c1 = simplicial_comass(x, b1, 2).value.coeff;
  Rational c2 = simplicial_comass(x, b2, 2).value.coeff;
  CHECK(simplicial_comass(x, b1 + b2, 2).value.coeff <= c1 + c2);
  CHECK(simplicial_comass(x, Rational(-7, 3) * b1, 2).value.coeff ==
        Rational(7, 3) * c1);
}

TEST_CASE("any explicit cycle gives a lower bound") {
  std::mt19937 rng(55);
  SimplicialComplex x = boundary_delta(3);
  Cochain b = testutil::random_cochain(rng, x, 3);
  Chain z0 = fundamental_cycle(x, 3);
  Rational p = pairing(b, z0);
  if (p < 0) p = -p;
  // comass >= <b, z0> / l1(z0), both sides in units of 1/vol_n
  CHECK(simplicial_comass(x, b, 3).value.coeff >= p / l1_norm(z0));
}

TEST_CASE("edge scale scales the dual value") {
  SimplicialComplex x = boundary_delta(2);
  x.set_edge_scale(Rational(1, 2));
  Cochain b(2);
  b.coeffs[{0, 1, 2}] = 1;
  // comass coeff = linf value / edge^2
  ComassResult r = simplicial_comass(x, b, 2);
  LinfResult d = linf_min_representative(x, b, 2);
  CHECK(d.value == Rational(1, 4));
  CHECK(r.value.coeff == 1);
}
