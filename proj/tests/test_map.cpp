#include "doctest.h"

#include "comass/simplicial_map.hpp"
#include "comass/smith.hpp"
#include "comass/spheres.hpp"
#include "helpers.hpp"

#include <random>

using namespace comass;

namespace {

// cycle graph on n vertices 0..n-1
SimplicialComplex polygon(int n) {
  std::vector<Simplex> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return validate_complex(edges);
}

}  // namespace

TEST_CASE("simpliciality is enforced") {
  SimplicialComplex dom = polygon(6);
  SimplicialComplex cod = polygon(3);
  std::map<int, int> good;
  for (int i = 0; i < 6; ++i) good[i] = i % 3;
  CHECK(is_simplicial(dom, cod, good));
  CHECK_NOTHROW(SimplicialMap(&dom, &cod, good));
  std::map<int, int> partial = good;
  partial.erase(3);
  CHECK(!is_simplicial(dom, cod, partial));
  CHECK_THROWS_AS(SimplicialMap(&dom, &cod, partial), DomainError);
}

TEST_CASE("a non-simplicial vertex assignment is rejected") {
  SimplicialComplex dom = validate_complex({{0, 1}});
  SimplicialComplex cod = validate_complex({{0, 1}, {2}});
  std::map<int, int> f{{0, 0}, {1, 2}};  // image (0,2) spans no edge
  CHECK(!is_simplicial(dom, cod, f));
}

TEST_CASE("pushforward basics") {
  SimplicialComplex x = boundary_delta(2);
  SimplicialMap id(&x, &x, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  Chain fc = fundamental_cycle(x, 2);
  CHECK(pushforward(id, fc) == fc);

  // constant map kills positive-degree chains
  SimplicialComplex pt = validate_complex({{0}});
  SimplicialMap c(&x, &pt, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  CHECK(pushforward(c, fc).is_zero());
}

TEST_CASE("pushforward commutes with boundary") {
  std::mt19937 rng(31);
  SimplicialComplex x = testutil::random_complex(rng, 3, 5, 8);
  // collapse-to-an-edge style map: v -> v % 2 onto a single edge
  SimplicialComplex cod = validate_complex({{0, 1}});
  std::map<int, int> vm;
  for (int v : x.vertices()) vm[v] = v % 2;
  SimplicialMap f(&x, &cod, vm);
  for (int k = 1; k <= x.dim(); ++k) {
    Chain z = testutil::random_cochain(rng, x, k);
    CHECK(boundary(pushforward(f, z)) == pushforward(f, boundary(z)));
  }
}

TEST_CASE("pullback is adjoint to pushforward") {
  std::mt19937 rng(32);
  SimplicialComplex dom = polygon(6);
  SimplicialComplex cod = polygon(3);
  std::map<int, int> vm;
  for (int i = 0; i < 6; ++i) vm[i] = i % 3;
  SimplicialMap f(&dom, &cod, vm);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain b = testutil::random_cochain(rng, cod, 1);
    Chain z = testutil::random_cochain(rng, dom, 1);
    CHECK(pairing(pullback(f, b), z) == pairing(b, pushforward(f, z)));
  }
}

TEST_CASE("degree-2 circle map pullback pairs to 2") {
  SimplicialComplex dom = polygon(6);
  SimplicialComplex cod = polygon(3);
  std::map<int, int> vm;
  for (int i = 0; i < 6; ++i) vm[i] = i % 3;
  SimplicialMap f(&dom, &cod, vm);
  Cochain b(1);
  b.coeffs[{0, 1}] = 1;  // indicator of one target edge
  Chain fc = fundamental_cycle(dom, 1);
  Rational p = pairing(pullback(f, b), fc);
  if (p < 0) p = -p;  // orientation of the fundamental cycle is a convention
  CHECK(p == 2);
}

TEST_CASE("mapping cylinder of a point map is an interval") {
  SimplicialComplex a = validate_complex({{0}});
  SimplicialComplex b = validate_complex({{0}});
  SimplicialMap f(&a, &b, {{0, 0}});
  MappingCylinder cyl = mapping_cylinder(f);
  CHECK(cyl.complex.count(0) == 2);
  CHECK(cyl.complex.count(1) == 1);
  CHECK(cyl.complex.dim() == 1);
}

TEST_CASE("mapping cylinder of the identity on a sphere") {
  SimplicialComplex s = boundary_delta(2);
  SimplicialMap f(&s, &s, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  MappingCylinder cyl = mapping_cylinder(f);
  CHECK(homology(cyl.complex, 2).betti == 1);
  CHECK(homology(cyl.complex, 1).betti == 0);
  CHECK(homology(cyl.complex, 0).betti == 1);
}

TEST_CASE("mapping cylinder homology equals codomain homology") {
  std::mt19937 rng(33);
  SimplicialComplex dom = polygon(6);
  SimplicialComplex cod = polygon(3);
  std::map<int, int> vm;
  for (int i = 0; i < 6; ++i) vm[i] = i % 3;
  SimplicialMap f(&dom, &cod, vm);
  MappingCylinder cyl = mapping_cylinder(f);
  for (int k = 0; k <= 1; ++k) {
    HomologyGroup hc = homology(cyl.complex, k);
    HomologyGroup hb = homology(cod, k);
    CHECK(hc.betti == hb.betti);
    CHECK(hc.torsion == hb.torsion);
  }
}

TEST_CASE("cylinder retraction carries degree") {
  // degree-2 circle map: the domain circle's class retracts to twice the
  // codomain class
  SimplicialComplex dom = polygon(6);
  SimplicialComplex cod = polygon(3);
  std::map<int, int> vm;
  for (int i = 0; i < 6; ++i) vm[i] = i % 3;
  SimplicialMap f(&dom, &cod, vm);
  MappingCylinder cyl = mapping_cylinder(f);
  CHECK(homology(cyl.complex, 1).betti == 1);
  // include the domain circle into the cylinder, then retract to codomain
  Chain fc = fundamental_cycle(dom, 1);
  Chain included(1);
  for (const auto& [s, c] : fc.coeffs)
    included.add_term({cyl.domain_vertex.at(s[0]), cyl.domain_vertex.at(s[1])},
                      c);
  SimplicialMap r(&cyl.complex, &cod, cyl.retraction);
  Chain pushed = pushforward(r, included);
  Chain target = fundamental_cycle(cod, 1);
  CHECK((pushed == Rational(2) * target || pushed == Rational(-2) * target));
}
