#include "comass/comass.hpp"

namespace comass {

ComassResult simplicial_comass(const SimplicialComplex& x, const Cochain& b,
                               int n) {
  if (n < 0 || n > x.dim()) throw DomainError("simplicial_comass: bad degree");
  for (const auto& [s, c] : b.coeffs)
    if (!x.contains(s)) throw DomainError("cochain not supported on complex");

  const int np = x.count(n);
  // two nonnegative variables per oriented n-simplex: z = z+ - z-
  LinearProgram lp;
  lp.num_vars = 2 * np;
  lp.objective.assign(2 * np, Rational(0));
  for (int p = 0; p < np; ++p) {
    const Rational c = b.coeff(x.simplices(n)[p]);
    lp.objective[2 * p] = c;
    lp.objective[2 * p + 1] = -c;
  }
  // mass constraint, with the vol_n edge^n factor pulled out:
  //   sum (z+ + z-) <= 1   computes comass up to that factor
  LPRow massrow;
  for (int p = 0; p < 2 * np; ++p) massrow.terms.emplace_back(p, Rational(1));
  massrow.sense = RowSense::LE;
  massrow.rhs = 1;
  lp.rows.push_back(std::move(massrow));
  // cycle constraints  dz = 0, one per (n-1)-simplex
  if (n > 0) {
    MatZ d = boundary_matrix(x, n);
    for (int f = 0; f < d.rows(); ++f) {
      LPRow row;
      for (int p = 0; p < np; ++p)
        if (d(f, p) != 0) {
          row.terms.emplace_back(2 * p, Rational(d(f, p)));
          row.terms.emplace_back(2 * p + 1, Rational(-d(f, p)));
        }
      if (row.terms.empty()) continue;
      row.sense = RowSense::EQ;
      row.rhs = 0;
      lp.rows.push_back(std::move(row));
    }
  }

  LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::Optimal)
    throw DomainError("comass LP did not reach an optimum");

  ComassResult out;
  Rational scale = 1;
  for (int i = 0; i < n; ++i) scale *= x.edge_scale();
  out.value = ComassValue{sol.objective / scale, n};
  out.witness = Chain(n);
  if (sol.objective > 0)
    for (int p = 0; p < np; ++p) {
      const Rational v = sol.x[2 * p] - sol.x[2 * p + 1];
      if (v != 0) out.witness.coeffs[x.simplices(n)[p]] = v;
    }
  return out;
}

LinfResult linf_min_representative(const SimplicialComplex& x,
                                   const Cochain& b, int n) {
  if (n <= 0 || n > x.dim())
    throw DomainError("linf_min_representative: bad degree");
  const int nb = x.count(n - 1);
  const int np = x.count(n);
  // variables: beta (free, one per (n-1)-simplex), then t >= 0
  LinearProgram lp;
  lp.num_vars = nb + 1;
  lp.objective.assign(nb + 1, Rational(0));
  lp.objective[nb] = -1;  // maximize -t
  lp.free_var.assign(nb + 1, true);
  lp.free_var[nb] = false;
  MatZ d = boundary_matrix(x, n);  // (d beta)_p = sum_f d(f, p) beta_f
  for (int p = 0; p < np; ++p) {
    const Rational bp = b.coeff(x.simplices(n)[p]);
    LPRow lo, hi;  //  -t <= (b - d beta)_p <= t
    for (int f = 0; f < nb; ++f)
      if (d(f, p) != 0) {
        lo.terms.emplace_back(f, Rational(-d(f, p)));
        hi.terms.emplace_back(f, Rational(d(f, p)));
      }
    lo.terms.emplace_back(nb, Rational(-1));
    lo.sense = RowSense::LE;
    lo.rhs = -bp;
    hi.terms.emplace_back(nb, Rational(-1));
    hi.sense = RowSense::LE;
    hi.rhs = bp;
    lp.rows.push_back(std::move(lo));
    lp.rows.push_back(std::move(hi));
  }

  LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::Optimal)
    throw DomainError("linf LP did not reach an optimum");
  LinfResult out;
  out.value = -sol.objective;
  out.beta = Cochain(n - 1);
  for (int f = 0; f < nb; ++f)
    if (sol.x[f] != 0) out.beta.coeffs[x.simplices(n - 1)[f]] = sol.x[f];
  return out;
}

}  // namespace comass
