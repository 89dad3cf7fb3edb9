#include "comass/smith.hpp"

#include <algorithm>

namespace comass {

namespace {

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void row_op(MatZ& s, MatZ& u, int dst, int src, const Integer& q) {
  s.row(dst) -= q * s.row(src);
  u.row(dst) -= q * u.row(src);
}

void col_op(MatZ& s, MatZ& v, int dst, int src, const Integer& q) {
  s.col(dst) -= q * s.col(src);
  v.col(dst) -= q * v.col(src);
}

}  // namespace

SmithForm smith_normal_form(const MatZ& a) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  SmithForm f;
  f.s = a;
  f.u = MatZ::Identity(m, m);
  f.v = MatZ::Identity(n, n);
  int t = 0;
  while (t < std::min(m, n)) {
    // pick the minimum-magnitude nonzero pivot in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (f.s(i, j) != 0 &&
            (pi < 0 || iabs(f.s(i, j)) < iabs(f.s(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    f.s.row(t).swap(f.s.row(pi));
    f.u.row(t).swap(f.u.row(pi));
    f.s.col(t).swap(f.s.col(pj));
    f.v.col(t).swap(f.v.col(pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i)
        if (f.s(i, t) != 0) {
          Integer q = f.s(i, t) / f.s(t, t);
          row_op(f.s, f.u, i, t, q);
          if (f.s(i, t) != 0) {  // remainder beats pivot: swap and restart
            f.s.row(t).swap(f.s.row(i));
            f.u.row(t).swap(f.u.row(i));
            clean = false;
          }
        }
      for (int j = t + 1; j < n; ++j)
        if (f.s(t, j) != 0) {
          Integer q = f.s(t, j) / f.s(t, t);
          col_op(f.s, f.v, j, t, q);
          if (f.s(t, j) != 0) {
            f.s.col(t).swap(f.s.col(j));
            f.v.col(t).swap(f.v.col(j));
            clean = false;
          }
        }
    }
    ++t;
  }
  // enforce divisibility s_i | s_{i+1}
  int r = 0;
  while (r < std::min(m, n) && f.s(r, r) != 0) ++r;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < r; ++i)
      if (f.s(i + 1, i + 1) % f.s(i, i) != 0) {
        // fold entry i+1 into row i, then re-diagonalise the 2x2 block
        f.s.col(i) += f.s.col(i + 1);
        f.v.col(i) += f.v.col(i + 1);
        // euclid on rows i, i+1 within column i
        while (f.s(i + 1, i) != 0) {
          Integer q = f.s(i, i) / f.s(i + 1, i);
          row_op(f.s, f.u, i, i + 1, q);
          f.s.row(i).swap(f.s.row(i + 1));
          f.u.row(i).swap(f.u.row(i + 1));
        }
        Integer q = f.s(i, i + 1) / f.s(i, i);
        col_op(f.s, f.v, i + 1, i, q);
        again = true;
      }
  }
  for (int i = 0; i < r; ++i)
    if (f.s(i, i) < 0) {
      f.s.row(i) = -f.s.row(i);
      f.u.row(i) = -f.u.row(i);
    }
  f.rank = r;
  return f;
}

int rational_rank(const MatZ& a) {
  MatR m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = Rational(a(i, j));
  int rank = 0;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(row).swap(m.row(piv));
    for (int i = row + 1; i < m.rows(); ++i)
      if (m(i, col) != 0) m.row(i) -= (m(i, col) / m(row, col)) * m.row(row);
    ++row;
    ++rank;
  }
  return rank;
}

HomologyGroup homology(const SimplicialComplex& x, int k) {
  if (k < 0 || k > x.dim()) return {};
  MatZ dk = boundary_matrix(x, k);        // C_k -> C_{k-1}
  MatZ dk1 = boundary_matrix(x, k + 1);   // C_{k+1} -> C_k
  int rank_dk = (k == 0) ? 0 : smith_normal_form(dk).rank;
  SmithForm f1 = smith_normal_form(dk1);
  HomologyGroup h;
  h.betti = x.count(k) - rank_dk - f1.rank;
  for (int i = 0; i < f1.rank; ++i)
    if (f1.s(i, i) > 1) h.torsion.push_back(f1.s(i, i));
  return h;
}

std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b) {
  return solve_integer(smith_normal_form(a), b);
}

std::optional<VecZ> solve_integer(const SmithForm& f, const VecZ& b) {
  VecZ c = f.u * b;
  VecZ y = VecZ::Zero(f.v.rows());
  for (int i = 0; i < f.rank; ++i) {
    if (c[i] % f.s(i, i) != 0) return std::nullopt;
    y[i] = c[i] / f.s(i, i);
  }
  for (int i = f.rank; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return VecZ(f.v * y);
}

std::optional<VecR> solve_rational(const MatR& a, const VecR& b) {
  MatR m(a.rows(), a.cols() + 1);
  m.leftCols(a.cols()) = a;
  m.col(a.cols()) = b;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < a.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(row).swap(m.row(piv));
    m.row(row) /= m(row, col);
    for (int i = 0; i < m.rows(); ++i)
      if (i != row && m(i, col) != 0) m.row(i) -= m(i, col) * m.row(row);
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < m.rows(); ++i)
    if (m(i, a.cols()) != 0) return std::nullopt;
  VecR x = VecR::Zero(a.cols());
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = m(i, a.cols());
  return x;
}

}  // namespace comass
