#include "doctest.h"

#include "comass/gadget.hpp"
#include "comass/smith.hpp"
#include "comass/spheres.hpp"

using namespace comass;

namespace {

LatticeBasis make_basis(int N, std::vector<std::vector<int>> rows) {
  LatticeBasis b;
  b.N = N;
  for (const auto& r : rows) {
    std::vector<Integer> v(r.begin(), r.end());
    b.vectors.push_back(v);
  }
  return b;
}

// signed count of facets of the domain cycle mapping onto one chosen facet
// of the wedge: an independent oracle for the degree of the map
Integer preimage_degree(const DegreeMap& dm, const Simplex& target) {
  SimplicialMap f(&dm.domain, &dm.codomain, dm.vertex_map);
  Integer total = 0;
  for (const auto& [s, c] : dm.domain_cycle.coeffs) {
    Simplex img;
    for (int v : s) img.push_back(f.apply(v));
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;
    if (img != target) continue;
    // permutation sign of the vertex images relative to sorted order
    std::vector<int> raw;
    for (int v : s) raw.push_back(f.apply(v));
    int sign = 1;
    for (std::size_t i = 0; i < raw.size(); ++i)
      for (std::size_t j = i + 1; j < raw.size(); ++j)
        if (raw[i] > raw[j]) sign = -sign;
    total += numerator(c) * sign;
  }
  return total;
}

}  // namespace

TEST_CASE("degree map with all degrees zero is constant on top cells") {
  DegreeMap dm = build_degree_map(2, {0});
  SimplicialMap f(&dm.domain, &dm.codomain, dm.vertex_map);
  CHECK(pushforward(f, dm.domain_cycle).is_zero());
}

TEST_CASE("degree one map hits the single target once") {
  DegreeMap dm = build_degree_map(2, {1});
  SimplicialMap f(&dm.domain, &dm.codomain, dm.vertex_map);
  CHECK(pushforward(f, dm.domain_cycle) == dm.sigma_cycles[0]);
}

TEST_CASE("mixed degrees (2, -1)") {
  DegreeMap dm = build_degree_map(2, {2, -1});
  SimplicialMap f(&dm.domain, &dm.codomain, dm.vertex_map);
  Chain expect = Rational(2) * dm.sigma_cycles[0] +
                 Rational(-1) * dm.sigma_cycles[1];
  CHECK(pushforward(f, dm.domain_cycle) == expect);
  // independent signed-preimage count over one facet of each summand
  for (int j = 0; j < 2; ++j) {
    const auto& [s0, c0] = *dm.sigma_cycles[j].coeffs.begin();
    Integer cnt = preimage_degree(dm, s0);
    // the facet carries coefficient c0 inside [Sigma_j]
    CHECK(Rational(cnt) == Rational(j == 0 ? 2 : -1) * c0);
  }
  // the domain is a sphere
  CHECK(homology(dm.domain, 2).betti == 1);
  CHECK(homology(dm.domain, 1).betti == 0);
  CHECK(boundary(dm.domain_cycle).is_zero());
}

TEST_CASE("gadget from the one-dimensional identity basis") {
  GadgetComplex g = build_gadget(make_basis(1, {{1}}), 2);
  CHECK(homology(g.x, 2).betti == 1);
  CHECK(homology(g.x, 2).torsion.empty());
  REQUIRE(g.s_cycles.size() == 1);
  REQUIRE(g.generator_cocycles.size() == 1);
  CHECK(pairing(g.generator_cocycles[0], g.s_cycles[0]) == 3);
  CHECK(pairing(g.generator_cocycles[0], g.sigma_cycles[0]) == 1);
}

TEST_CASE("gadget from the planar identity basis") {
  GadgetComplex g = build_gadget(make_basis(2, {{1, 0}, {0, 1}}), 2);
  CHECK(homology(g.x, 2).betti == 2);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      CHECK(pairing(g.generator_cocycles[j], g.s_cycles[i]) ==
            (i == j ? 3 : 0));
}

TEST_CASE("rank-deficient bases are rejected") {
  CHECK_THROWS_AS(build_gadget(make_basis(2, {{1, 1}, {2, 2}}), 2),
                  DomainError);
}

TEST_CASE("generator cocycles are cocycles dual to the wedge spheres") {
  GadgetComplex g = build_gadget(make_basis(2, {{2, -1}}), 2);
  for (std::size_t j = 0; j < g.generator_cocycles.size(); ++j) {
    CHECK(coboundary(g.x, g.generator_cocycles[j]).is_zero());
    for (std::size_t k = 0; k < g.sigma_cycles.size(); ++k)
      CHECK(pairing(g.generator_cocycles[j], g.sigma_cycles[k]) ==
            (j == k ? 1 : 0));
  }
  // evaluation pairing: <gamma(v), [S_i]> = 3 sum_j v_j u_ji
  for (int i = 0; i < 2; ++i)
    CHECK(pairing(class_of_vector(g, {Integer(1)}), g.s_cycles[i]) ==
          3 * g.basis.vectors[0][i]);
  // certificate cycles stay inside the mass budget: l1 * vol_2 <= 3
  for (const Chain& s : g.s_cycles) {
    CHECK(boundary(s).is_zero());
    CHECK(times_volume_le(l1_norm(s), 2, 3));
  }
}

TEST_CASE("class_of_vector is linear and validates length") {
  GadgetComplex g = build_gadget(make_basis(2, {{1, 0}, {0, 1}}), 2);
  Cochain sum = class_of_vector(g, {Integer(2), Integer(-3)});
  Cochain manual = Rational(2) * g.generator_cocycles[0] +
                   Rational(-3) * g.generator_cocycles[1];
  CHECK(sum == manual);
  CHECK(class_of_vector(g, {Integer(0), Integer(0)}).is_zero());
  CHECK_THROWS_AS(class_of_vector(g, {Integer(1)}), MalformedInput);
}

TEST_CASE("build report carries the size budget") {
  GadgetComplex g = build_gadget(make_basis(1, {{1}}), 2);
  CHECK(g.build_report.find("budget") != std::string::npos);
}
