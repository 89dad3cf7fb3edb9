#include "comass/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <utility>
#include <vector>

namespace comass {

namespace {

using VecR = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

constexpr int kDegenerateStreakLimit = 40;

/// Sparse tableau row: (column, value) pairs sorted by column, no zeros.
/// LP tableaux here start +-1-sparse (boundary matrices), and staying
/// sparse under pivoting is what makes exact arithmetic affordable.
using SparseRow = std::vector<std::pair<int, Rational>>;

Rational get(const SparseRow& row, int col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<int, Rational>& a, int c) { return a.first < c; });
  if (it != row.end() && it->first == col) return it->second;
  return 0;
}

void set_entry(SparseRow& row, int col, const Rational& v) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<int, Rational>& a, int c) { return a.first < c; });
  if (it != row.end() && it->first == col) {
    if (v == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    row.insert(it, {col, v});
  }
}

/// dst - f * src (sorted merge, zeros dropped)
SparseRow axpy_sub(const SparseRow& dst, const Rational& f,
                   const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() ||
        (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -f * src[j].second);
      ++j;
    } else {
      Rational v = dst[i].second - f * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

struct Tableau {
  std::vector<SparseRow> rowdata;  // m sparse constraint rows
  VecR rhs;                        // m, kept nonnegative
  std::vector<int> basis;
  std::vector<bool> barred;  // columns excluded from entering
  VecR obj;                  // reduced costs of the current phase (dense)
  Rational objval = 0;
  int ncols = 0;
  std::vector<int> colcnt;  // rows touching each column (fill heuristic)
  long long pivots = 0;

  int rows() const { return static_cast<int>(rowdata.size()); }

  void count_columns() {
    colcnt.assign(ncols, 0);
    for (const SparseRow& row : rowdata)
      for (const auto& [col, v] : row) ++colcnt[col];
  }

  void replace_row(int i, SparseRow&& next) {
    for (const auto& [col, v] : rowdata[i]) --colcnt[col];
    rowdata[i] = std::move(next);
    for (const auto& [col, v] : rowdata[i]) ++colcnt[col];
  }

  void price_out(const VecR& c) {
    obj = c;
    objval = 0;
    for (int i = 0; i < rows(); ++i) {
      const Rational cb = c[basis[i]];
      if (cb != 0) {
        for (const auto& [col, v] : rowdata[i]) obj[col] -= cb * v;
        objval += cb * rhs[i];
        obj[basis[i]] = 0;  // exact: basis column is a unit vector
      }
    }
  }

  void pivot(int r, int e) {
    const Rational piv = get(rowdata[r], e);
    if (piv != 1) {
      for (auto& [col, v] : rowdata[r]) v /= piv;
      rhs[r] /= piv;
    }
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const Rational f = get(rowdata[i], e);
      if (f != 0) {
        rhs[i] -= f * rhs[r];
        replace_row(i, axpy_sub(rowdata[i], f, rowdata[r]));
      }
    }
    if (obj[e] != 0) {
      const Rational f = obj[e];
      objval += f * rhs[r];
      for (const auto& [col, v] : rowdata[r]) obj[col] -= f * v;
      obj[e] = 0;
    }
    basis[r] = e;
    ++pivots;
  }

  /// Maximizes the current objective row.  Returns false on unboundedness.
  /// `stop_at`, when given, is a known upper bound on the objective: once
  /// objval reaches it no further pivots can help (used by phase 1, whose
  /// objective is bounded by 0, so an all-zero right-hand side costs no
  /// pivots at all).
  bool optimize(const Rational* stop_at = nullptr) {
    int degenerate_streak = 0;
    bool bland = false;
    for (;;) {
      if (stop_at && objval >= *stop_at) return true;
      int e = -1;
      if (bland) {
        for (int j = 0; j < ncols; ++j)
          if (!barred[j] && obj[j] > 0) {
            e = j;
            break;
          }
      } else {
        for (int j = 0; j < ncols; ++j)
          if (!barred[j] && obj[j] > 0 && (e < 0 || obj[j] > obj[e])) e = j;
      }
      if (e < 0) return true;
      int r = -1;
      Rational tre;  // t(r, e)
      for (int i = 0; i < rows(); ++i) {
        const Rational tie = get(rowdata[i], e);
        if (tie > 0) {
          if (r < 0) {
            r = i;
            tre = tie;
            continue;
          }
          const Rational lhs = rhs[i] * tre;
          const Rational rhs_ = rhs[r] * tie;
          if (lhs < rhs_ || (lhs == rhs_ && basis[i] < basis[r])) {
            r = i;
            tre = tie;
          }
        }
      }
      if (r < 0) return false;
      if (rhs[r] == 0) {
        if (++degenerate_streak > kDegenerateStreakLimit) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }
      pivot(r, e);
    }
  }
};

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars)
    throw DomainError("solve_lp: objective size mismatch");
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());

  // column layout: one column per variable, plus a negative part for each
  // free variable, then slacks/surpluses, then artificials
  std::vector<int> neg_col(n, -1);
  int ncols = n;
  for (int j = 0; j < n; ++j)
    if (!lp.free_var.empty() && lp.free_var[j]) neg_col[j] = ncols++;
  const int slack_base = ncols;
  for (const auto& row : lp.rows)
    if (row.sense != RowSense::EQ) ++ncols;
  const int art_base = ncols;
  // artificial for every row that lacks a ready-made basic slack
  std::vector<int> art_col(m, -1);
  for (int i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    const bool flip = row.rhs < 0;
    bool slack_basic = false;
    if (row.sense == RowSense::LE && !flip) slack_basic = true;
    if (row.sense == RowSense::GE && flip) slack_basic = true;
    if (!slack_basic) art_col[i] = ncols++;
  }

  Tableau tab;
  tab.rowdata.resize(m);
  tab.rhs = VecR::Zero(m);
  tab.basis.assign(m, -1);
  tab.ncols = ncols;
  tab.barred.assign(ncols, false);
  {
    int c = slack_base;
    for (int i = 0; i < m; ++i) {
      const auto& row = lp.rows[i];
      const Rational sign = row.rhs < 0 ? -1 : 1;
      for (const auto& [j, coef] : row.terms) {
        if (j < 0 || j >= n) throw DomainError("solve_lp: bad column index");
        set_entry(tab.rowdata[i], j, get(tab.rowdata[i], j) + sign * coef);
        if (neg_col[j] >= 0)
          set_entry(tab.rowdata[i], neg_col[j],
                    get(tab.rowdata[i], neg_col[j]) - sign * coef);
      }
      tab.rhs[i] = sign * row.rhs;
      if (row.sense != RowSense::EQ) {
        const Rational sval = sign * (row.sense == RowSense::LE ? 1 : -1);
        set_entry(tab.rowdata[i], c, sval);
        if (sval > 0) tab.basis[i] = c;
        ++c;
      }
      if (art_col[i] >= 0) {
        set_entry(tab.rowdata[i], art_col[i], 1);
        tab.basis[i] = art_col[i];
      }
    }
  }
  tab.count_columns();

  // phase 1: maximize -(sum of artificials)
  if (art_base < ncols) {
    VecR c1 = VecR::Zero(ncols);
    for (int i = 0; i < m; ++i)
      if (art_col[i] >= 0) c1[art_col[i]] = -1;
    const Rational zero = 0;
    tab.price_out(c1);
    tab.optimize(&zero);  // phase-1 objective is at most 0
    if (tab.objval != 0) {
      LPSolution sol;
      sol.status = LPStatus::Infeasible;
      return sol;
    }
    // Drive artificials out of the basis where possible.  Rows are handled
    // sparsest-first and each pivots on its least-populated column: this
    // Markowitz-style order keeps the elimination fill (and hence the cost
    // of the exact arithmetic) low on incidence-like constraint matrices.
    std::vector<int> art_rows;
    for (int i = 0; i < m; ++i)
      if (tab.basis[i] >= art_base) art_rows.push_back(i);
    while (!art_rows.empty()) {
      int best_row = -1, best_col = -1;
      std::size_t best_rnnz = 0;
      int best_cnnz = 0;
      for (int i : art_rows) {
        for (const auto& [col, v] : tab.rowdata[i]) {
          if (col >= art_base) continue;
          if (best_row < 0 || tab.rowdata[i].size() < best_rnnz ||
              (tab.rowdata[i].size() == best_rnnz &&
               tab.colcnt[col] < best_cnnz)) {
            best_row = i;
            best_col = col;
            best_rnnz = tab.rowdata[i].size();
            best_cnnz = tab.colcnt[col];
          }
        }
      }
      // remaining rows are fully zero outside the artificial block:
      // redundant constraints whose artificials stay basic at 0
      if (best_row < 0) break;
      tab.pivot(best_row, best_col);
      art_rows.erase(std::find(art_rows.begin(), art_rows.end(), best_row));
    }
    for (int j = art_base; j < ncols; ++j) tab.barred[j] = true;
  }

  const long long phase1_pivots = tab.pivots;

  // phase 2
  VecR c2 = VecR::Zero(ncols);
  for (int j = 0; j < n; ++j) {
    c2[j] = lp.objective[j];
    if (neg_col[j] >= 0) c2[neg_col[j]] = -lp.objective[j];
  }
  tab.price_out(c2);
  LPSolution sol;
  if (!tab.optimize()) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }
  sol.status = LPStatus::Optimal;
  if (std::getenv("COMASS_DEBUG")) {
    long long nnz = 0;
    for (const auto& row : tab.rowdata) nnz += row.size();
    std::cerr << "[lp] rows=" << m << " cols=" << ncols << " pivots=("
              << phase1_pivots << "," << tab.pivots - phase1_pivots
              << ") nnz=" << nnz << "\n";
  }
  sol.objective = tab.objval;
  sol.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    const int j = tab.basis[i];
    if (j < n)
      sol.x[j] += tab.rhs[i];
    else
      for (int k = 0; k < n; ++k)
        if (neg_col[k] == j) sol.x[k] -= tab.rhs[i];
  }
  return sol;
}

}  // namespace comass
