#include "doctest.h"

#include "comass/lp.hpp"
#include "helpers.hpp"

#include <random>

using namespace comass;

namespace {

LPRow le(std::vector<std::pair<int, Rational>> terms, Rational rhs) {
  LPRow r;
  r.terms = std::move(terms);
  r.sense = RowSense::LE;
  r.rhs = rhs;
  return r;
}

}  // namespace

TEST_CASE("one-variable box") {
  LinearProgram p;
  p.num_vars = 1;
  p.objective = {1};
  p.rows.push_back(le({{0, 1}}, 1));
  LPSolution s = solve_lp(p);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.objective == 1);
  CHECK(s.x[0] == 1);
}

TEST_CASE("unbounded ray") {
  LinearProgram p;
  p.num_vars = 1;
  p.objective = {1};
  CHECK(solve_lp(p).status == LPStatus::Unbounded);
}

TEST_CASE("two-constraint vertex optimum") {
  // maximize x+y s.t. x+2y <= 4, 3x+y <= 6 -> 14/5 at (8/5, 6/5)
  LinearProgram p;
  p.num_vars = 2;
  p.objective = {1, 1};
  p.rows.push_back(le({{0, 1}, {1, 2}}, 4));
  p.rows.push_back(le({{0, 3}, {1, 1}}, 6));
  LPSolution s = solve_lp(p);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.objective == Rational(14, 5));
  CHECK(s.x[0] == Rational(8, 5));
  CHECK(s.x[1] == Rational(6, 5));
}

TEST_CASE("infeasible equality") {
  LinearProgram p;
  p.num_vars = 1;
  p.objective = {0};
  LPRow r;
  r.terms = {{0, 1}};
  r.sense = RowSense::EQ;
  r.rhs = -1;  // x = -1 with x >= 0
  p.rows.push_back(r);
  CHECK(solve_lp(p).status == LPStatus::Infeasible);
}

TEST_CASE("free variables can go negative") {
  LinearProgram p;
  p.num_vars = 1;
  p.objective = {-1};  // maximize -x
  p.free_var = {true};
  LPRow r;
  r.terms = {{0, 1}};
  r.sense = RowSense::GE;
  r.rhs = -5;  // x >= -5
  p.rows.push_back(r);
  LPSolution s = solve_lp(p);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.objective == 5);
  CHECK(s.x[0] == -5);
}

TEST_CASE("equality plus inequality mix") {
  // maximize x + 2y  s.t.  x + y = 3, y <= 2 -> (1,2), value 5
  LinearProgram p;
  p.num_vars = 2;
  p.objective = {1, 2};
  LPRow eq;
  eq.terms = {{0, 1}, {1, 1}};
  eq.sense = RowSense::EQ;
  eq.rhs = 3;
  p.rows.push_back(eq);
  p.rows.push_back(le({{1, 1}}, 2));
  LPSolution s = solve_lp(p);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.objective == 5);
  CHECK(s.x[0] == 1);
  CHECK(s.x[1] == 2);
}

TEST_CASE("random LPs agree with the vertex-enumeration oracle") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> rhs(0, 6);
  std::uniform_int_distribution<int> nv(2, 3);
  for (int trial = 0; trial < 60; ++trial) {
    LinearProgram p;
    p.num_vars = nv(rng);
    p.objective.clear();
    for (int j = 0; j < p.num_vars; ++j) p.objective.push_back(coef(rng));
    for (int i = 0; i < 3; ++i) {
      std::vector<std::pair<int, Rational>> terms;
      for (int j = 0; j < p.num_vars; ++j) {
        int c = coef(rng);
        if (c != 0) terms.push_back({j, Rational(c)});
      }
      if (!terms.empty()) p.rows.push_back(le(std::move(terms), rhs(rng)));
    }
    // bound the region so the oracle's vertex enumeration is exhaustive
    for (int j = 0; j < p.num_vars; ++j) p.rows.push_back(le({{j, 1}}, 10));
    LPSolution s = solve_lp(p);
    auto oracle = testutil::lp_vertex_oracle(p);
    REQUIRE(s.status == LPStatus::Optimal);  // 0 is always feasible here
    REQUIRE(oracle.has_value());
    CHECK(s.objective == *oracle);
    // the returned primal point attains the optimum and is feasible
    Rational attained = 0;
    for (int j = 0; j < p.num_vars; ++j) attained += p.objective[j] * s.x[j];
    CHECK(attained == s.objective);
    for (const auto& row : p.rows) {
      Rational lhs = 0;
      for (const auto& [j, v] : row.terms) lhs += v * s.x[j];
      CHECK(lhs <= row.rhs);
    }
  }
}
