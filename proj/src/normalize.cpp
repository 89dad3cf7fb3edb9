#include "comass/normalize.hpp"

#include "comass/smith.hpp"

namespace comass {

Cochain solve_coboundary(const SimplicialComplex& x, const Cochain& c, int n) {
  if (n <= 0 || n > x.dim())
    throw DomainError("solve_coboundary: bad degree");
  const int nb = x.count(n - 1);
  const int np = x.count(n);
  MatZ d = boundary_matrix(x, n);  // coboundary matrix is d^T
  MatR a(np, nb);
  for (int p = 0; p < np; ++p)
    for (int f = 0; f < nb; ++f) a(p, f) = Rational(d(f, p));
  VecR rhs = VecR::Zero(np);
  for (const auto& [s, v] : c.coeffs) rhs[x.index_of(s)] = v;
  auto sol = solve_rational(a, rhs);
  if (!sol) throw NotExact(c);
  Cochain beta(n - 1);
  for (int f = 0; f < nb; ++f)
    if ((*sol)[f] != 0) beta.coeffs[x.simplices(n - 1)[f]] = (*sol)[f];
  return beta;
}

RoundResult round_cocycle(const SimplicialComplex& x, const Cochain& z,
                          const Cochain& zhat, int n) {
  if (!is_integral(z)) throw DomainError("round_cocycle: z must be integral");
  if (!coboundary(x, z).is_zero() || !coboundary(x, zhat).is_zero())
    throw DomainError("round_cocycle: inputs must be cocycles");
  Cochain beta = solve_coboundary(x, z - zhat, n);
  RoundResult out;
  out.integer_shift = Cochain(n - 1);
  for (const auto& [s, v] : beta.coeffs) {
    Integer r = nearest_int(v);
    if (r != 0) out.integer_shift.coeffs[s] = Rational(r);
  }
  out.rounded = z - coboundary(x, out.integer_shift);
  return out;
}

}  // namespace comass
