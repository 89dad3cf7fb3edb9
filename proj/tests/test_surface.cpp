#include "doctest.h"

#include "comass/gadget.hpp"
#include "comass/normalize.hpp"
#include "comass/smith.hpp"
#include "comass/spheres.hpp"
#include "comass/surface.hpp"

using namespace comass;

namespace {

// is (h - pushforward of sigma's fundamental cycle) a boundary in x?
bool pushforward_hits_class(const NetSurface& ns, const SimplicialComplex& x,
                            const Chain& h) {
  SimplicialMap p(&ns.sigma, &x, ns.vertex_map);
  Chain z = pushforward(p, fundamental_cycle(ns.sigma, 2));
  Chain diff = z - h;
  if (diff.is_zero()) return true;
  Chain flipped = Rational(-1) * z - h;  // opposite orientation of Sigma
  if (flipped.is_zero()) return true;
  for (const Chain* d : {&diff, &flipped}) {
    // boundary solvability over Q is enough here: the class comparison in
    // H_2(X;Q); an orientation flip of Sigma is accepted
    MatZ bnd = boundary_matrix(x, 3);
    MatR a(bnd.rows(), bnd.cols());
    for (int i = 0; i < bnd.rows(); ++i)
      for (int j = 0; j < bnd.cols(); ++j) a(i, j) = Rational(bnd(i, j));
    VecR rhs = vector_from_chain(x, *d);
    if (solve_rational(a, rhs).has_value()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("surface check accepts spheres and rejects non-surfaces") {
  CHECK_NOTHROW(check_surface(boundary_delta(2)));
  // three triangles around one edge
  SimplicialComplex bad =
      validate_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK_THROWS_AS(check_surface(bad), DomainError);
  // two spheres touching at a vertex: the link there is two cycles
  SimplicialComplex wedge = validate_complex(
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
       {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}});
  CHECK_THROWS_AS(check_surface(wedge), DomainError);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(boundary_delta(2)) == 2);
  CHECK(euler_characteristic(validate_complex({{0, 1, 2}})) == 1);
}

TEST_CASE("net surface over the solid tetrahedron with trivial class") {
  SimplicialComplex x = validate_complex({{0, 1, 2, 3}});
  NetSurface ns = build_net_surface(x, Chain(2), 1);
  CHECK_NOTHROW(check_surface(ns.sigma));
  CHECK(ns.report.euler == 2 - 2 * ns.report.genus);
  CHECK(ns.report.simplex_count <= ns.report.simplex_budget);
  CHECK(pushforward_hits_class(ns, x, Chain(2)));
  // the map is simplicial into X
  CHECK(is_simplicial(ns.sigma, x, ns.vertex_map));
  // girth at eps = 20 s: dense with finite delta
  SimplicialMap p(&ns.sigma, &x, ns.vertex_map);
  GirthReport g = epsilon_girth(p, 20);
  CHECK(g.dense);
  CHECK(g.delta >= 0);
}

TEST_CASE("net surface hits a sphere class inside a gadget") {
  LatticeBasis basis;
  basis.N = 1;
  basis.vectors = {{Integer(1)}};
  GadgetComplex g = build_gadget(basis, 2);
  // rescale so the s-net is sparse and Sigma stays desk-sized
  SimplicialComplex x = g.x;
  x.set_edge_scale(Rational(1, 4));
  Chain h = g.sigma_cycles[0];
  NetSurface ns = build_net_surface(x, h, 1);
  CHECK_NOTHROW(check_surface(ns.sigma));
  CHECK(ns.report.euler == 2 - 2 * ns.report.genus);
  CHECK(pushforward_hits_class(ns, x, h));
  SimplicialMap p(&ns.sigma, &x, ns.vertex_map);
  GirthReport gr = epsilon_girth(p, 20);
  CHECK(gr.dense);
}

TEST_CASE("class supports that are not surfaces are refused") {
  SimplicialComplex x = boundary_delta(2);
  Chain h(2);
  h.coeffs[{0, 1, 2}] = 2;  // not carried with +-1 coefficients
  CHECK_THROWS_AS(build_net_surface(x, h, 1), DomainError);
  Chain notcycle(2);
  notcycle.coeffs[{0, 1, 2}] = 1;
  CHECK_THROWS_AS(build_net_surface(x, notcycle, 1), DomainError);
}

TEST_CASE("girth of the identity map") {
  SimplicialComplex x = boundary_delta(2);
  std::map<int, int> id;
  for (int v : x.vertices()) id[v] = v;
  SimplicialMap p(&x, &x, id);
  GirthReport g = epsilon_girth(p, 1);
  CHECK(g.dense);
  CHECK(g.delta <= 4);  // preimage of a 2 eps ball is itself
  CHECK(g.witness.center >= 0);
}

TEST_CASE("girth of a constant map is not dense") {
  // a long path: diameter 4 > eps = 1
  SimplicialComplex x = validate_complex({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  SimplicialComplex dom = validate_complex({{0, 1}});
  SimplicialMap p(&dom, &x, {{0, 0}, {1, 0}});
  GirthReport g = epsilon_girth(p, 1);
  CHECK(!g.dense);
}
