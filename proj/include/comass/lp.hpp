#pragma once

#include "comass/rational.hpp"

#include <Eigen/Dense>
#include <vector>

namespace comass {

enum class RowSense { LE, GE, EQ };

/// Sparse row of a constraint matrix.
struct LPRow {
  std::vector<std::pair<int, Rational>> terms;  ///< (column, coefficient)
  RowSense sense = RowSense::LE;
  Rational rhs = 0;
};

/// maximize c^T x subject to the rows; variables are nonnegative unless
/// flagged free.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LPRow> rows;
  std::vector<bool> free_var;  ///< empty means all nonnegative
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rational objective = 0;
  std::vector<Rational> x;
};

/// Exact two-phase primal simplex.  Dantzig pricing with a Bland fallback
/// after a streak of degenerate pivots, so termination is guaranteed.
LPSolution solve_lp(const LinearProgram& lp);

}  // namespace comass
