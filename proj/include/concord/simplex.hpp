#pragma once

#include <vector>

#include "concord/rational.hpp"

namespace concord {

// Exact-rational LP in standard equality form:
//   minimize c.x  subject to  A x = b, x >= 0.
// Two-phase dense simplex with Bland's rule, so termination needs no
// perturbation. Sizes here are tiny (tens of columns), exactness is the point.
struct LpProblem {
  std::vector<std::vector<Rational>> rows;  // A, one inner vector per constraint
  std::vector<Rational> rhs;                // b
  std::vector<Rational> cost;               // c
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational value;
  // When infeasible: y with y.A <= 0 columnwise and y.b > 0, exact.
  std::vector<Rational> farkas;
};

LpSolution lp_solve(const LpProblem& p);

// Phase 1 only: any feasible vertex of {A x = b, x >= 0}.
LpSolution lp_feasible(const std::vector<std::vector<Rational>>& rows,
                       const std::vector<Rational>& rhs);

}  // namespace concord
