#pragma once

// Shared test utilities: seeded random complexes/cochains and independent
// oracles (rational rank by row reduction, LP optimum by vertex
// enumeration) used to cross-check the library's exact computations.

#include "comass/chain.hpp"
#include "comass/complex.hpp"
#include "comass/lp.hpp"

#include <optional>
#include <random>
#include <vector>

namespace testutil {

using comass::Chain;
using comass::Cochain;
using comass::Integer;
using comass::MatZ;
using comass::Rational;
using comass::Simplex;
using comass::SimplicialComplex;

/// Random complex of the given dimension: `tops` random top simplices on a
/// small vertex pool (face closure keeps it valid; connectivity is not
/// required by any of the checked properties).
inline SimplicialComplex random_complex(std::mt19937& rng, int dim,
                                        int tops, int pool = 10) {
  std::uniform_int_distribution<int> pick(0, pool - 1);
  std::vector<Simplex> maximal;
  while (static_cast<int>(maximal.size()) < tops) {
    std::vector<int> used;
    while (static_cast<int>(used.size()) < dim + 1) {
      int v = pick(rng);
      if (std::find(used.begin(), used.end(), v) == used.end())
        used.push_back(v);
    }
    std::sort(used.begin(), used.end());
    maximal.push_back(used);
  }
  return SimplicialComplex::from_maximal(maximal);
}

/// Random integral cochain of degree k with entries in [-hi, hi].
inline Cochain random_cochain(std::mt19937& rng, const SimplicialComplex& x,
                              int k, int hi = 3) {
  std::uniform_int_distribution<int> pick(-hi, hi);
  Cochain b(k);
  for (const Simplex& s : x.simplices(k)) {
    int c = pick(rng);
    if (c != 0) b.coeffs[s] = c;
  }
  return b;
}

/// Rank over Q by plain Gaussian elimination on a dense rational copy --
/// deliberately independent of the library's Smith form and of its
/// fraction-free reduction.
inline int rank_oracle(const MatZ& a) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  std::vector<std::vector<Rational>> w(m, std::vector<Rational>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = Rational(a(i, j));
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (w[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[rank], w[piv]);
    for (int i = 0; i < m; ++i) {
      if (i == rank || w[i][col] == 0) continue;
      Rational f = w[i][col] / w[rank][col];
      for (int j = col; j < n; ++j) w[i][j] -= f * w[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Brute-force LP oracle for small instances with nonnegative variables
/// and <=-rows only: enumerates all candidate vertices (solutions of
/// n-subsets of the constraints, including the bounds x_i = 0), keeps the
/// feasible ones, and returns the best objective.  Assumes the feasible
/// region is bounded (callers add box rows); returns nullopt if infeasible.
inline std::optional<Rational> lp_vertex_oracle(const comass::LinearProgram& p) {
  const int n = p.num_vars;
  // constraint list: each is (coefs, rhs) meaning sum coefs x <= rhs;
  // bounds x_i >= 0 are rows -x_i <= 0
  std::vector<std::pair<std::vector<Rational>, Rational>> cons;
  for (const auto& row : p.rows) {
    std::vector<Rational> c(n, Rational(0));
    for (const auto& [j, v] : row.terms) c[j] += v;
    cons.push_back({c, row.rhs});
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> c(n, Rational(0));
    c[i] = -1;
    cons.push_back({c, Rational(0)});
  }
  const int m = static_cast<int>(cons.size());
  std::optional<Rational> best;
  std::vector<int> idx(n);
  // enumerate all n-subsets of the m constraints
  std::vector<int> comb(n);
  for (int i = 0; i < n; ++i) comb[i] = i;
  auto advance = [&]() {
    int i = n - 1;
    while (i >= 0 && comb[i] == m - n + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  do {
    // solve the n x n system given by the chosen rows at equality
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w[i][j] = cons[comb[i]].first[j];
      w[i][n] = cons[comb[i]].second;
    }
    bool singular = false;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (w[i][col] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(w[col], w[piv]);
      for (int i = 0; i < n; ++i) {
        if (i == col || w[i][col] == 0) continue;
        Rational f = w[i][col] / w[col][col];
        for (int j = col; j <= n; ++j) w[i][j] -= f * w[col][j];
      }
    }
    if (singular) continue;
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = w[i][n] / w[i][i];
    bool feasible = true;
    for (const auto& [c, rhs] : cons) {
      Rational lhs = 0;
      for (int j = 0; j < n; ++j) lhs += c[j] * x[j];
      if (lhs > rhs) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    Rational val = 0;
    for (int j = 0; j < n; ++j) val += p.objective[j] * x[j];
    if (!best || val > *best) best = val;
  } while (advance());
  return best;
}

}  // namespace testutil
