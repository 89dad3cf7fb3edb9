#include "comass/lip_bounds.hpp"

#include "comass/smith.hpp"
#include "comass/spheres.hpp"

#include <cmath>

namespace comass {

SimplicialComplex model_sphere(int n, int t) {
  if (n < 1) throw DomainError("model_sphere: n must be >= 1");
  if (t < 1) throw DomainError("model_sphere: t must be >= 1");
  SimplicialComplex base = cross_polytope_sphere(n);
  if (t == 1) return base;
  return edgewise_subdivision(base, t).complex;
}

long long model_sphere_facets(int n, int t) {
  long long count = 1;
  for (int i = 0; i <= n; ++i) count *= 2;
  for (int i = 0; i < n; ++i) count *= t;
  return count;
}

Cochain fundamental_cocycle(const SimplicialComplex& sphere, int n) {
  Chain cycle = fundamental_cycle(sphere, n);
  // Top degree of an n-manifold: every n-cochain is closed, so the dual of
  // any single facet represents the generator pairing to 1 with [sphere].
  const Simplex& facet = sphere.simplices(n).front();
  Cochain g;
  g.degree = n;
  g.coeffs[facet] = cycle.coeffs.at(facet);  // +-1
  return g;
}

double sphere_volume(int n) {
  double half = (n + 1) / 2.0;
  return 2.0 * std::pow(M_PI, half) / std::tgamma(half);
}

LipBounds lip_bounds_from_comass(double c, int n, double c_upper) {
  if (n < 1) throw DomainError("lip_bounds_from_comass: n must be >= 1");
  if (c < 0) throw DomainError("lip_bounds_from_comass: comass must be >= 0");
  LipBounds out;
  out.lower = std::pow(sphere_volume(n) * c, 1.0 / n);
  out.upper = c_upper * (std::pow(c, 1.0 / n) + 1.0);
  return out;
}

AbsoluteLowerBound absolute_lower_bound(const SimplicialComplex& x, int n,
                                        int max_subdivision) {
  if (n < 1) throw DomainError("absolute_lower_bound: n must be >= 1");
  if (max_subdivision < 1)
    throw DomainError("absolute_lower_bound: max_subdivision must be >= 1");
  AbsoluteLowerBound out;
  long long facets = static_cast<long long>(x.simplices(n).size());
  long long factor = 1;
  for (int i = 0; i < n; ++i) factor *= max_subdivision;
  out.domain_count = facets * factor;
  int t = 1;
  while (model_sphere_facets(n, t) <= out.domain_count) ++t;
  out.t_star = t;
  out.model_count = model_sphere_facets(n, t);
  out.value = 1.0 / t;
  return out;
}

VerifyResult verify_certificate(const CertBundle& cert, const Cochain& target,
                                int n) {
  VerifyResult out;
  if (!is_simplicial(cert.domain, cert.codomain, cert.vertex_map)) {
    out.reason = "non-simplicial";
    return out;
  }
  if (cert.s < 1 || cert.t < 1) {
    out.reason = "non-simplicial";
    return out;
  }
  SimplicialMap f(&cert.domain, &cert.codomain, cert.vertex_map);
  Cochain pulled = pullback(f, fundamental_cocycle(cert.codomain, n));
  Cochain diff = pulled - target;
  if (!is_integral(diff)) {
    out.reason = "class-mismatch";
    return out;
  }
  // diff must be an integral coboundary: solve d beta = diff over Z.
  const auto& rows = cert.domain.simplices(n);
  MatZ d = boundary_matrix(cert.domain, n).transpose();
  VecZ rhs = VecZ::Zero(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    rhs(static_cast<Eigen::Index>(i)) = numerator(diff.coeff(rows[i]));
  if (d.cols() == 0) {
    if (rhs != VecZ::Zero(rhs.size())) {
      out.reason = "class-mismatch";
      return out;
    }
  } else if (!solve_integer(d, rhs)) {
    out.reason = "class-mismatch";
    return out;
  }
  out.accepted = true;
  out.bound = Rational(cert.s) / cert.t;
  return out;
}

}  // namespace comass
