#pragma once

#include "graphsep/rational.hpp"

namespace graphsep {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVec x;     // primal solution when Optimal
  RationalVec dual;  // Optimal: row prices. Infeasible: Farkas vector y with
                     // A^T y <= 0 and b.y > 0.
  Rational objective = 0;
};

/// Exact-rational two-phase simplex for  min c.x  s.t.  A x = b, x >= 0.
/// Dantzig pricing with a Bland's-rule fallback after a pivot budget, so the
/// solve always terminates.
class SimplexSolver {
 public:
  SimplexSolver(std::vector<RationalVec> rows, RationalVec rhs, RationalVec cost);

  LpResult solve();

 private:
  int m_, n_;
  std::vector<RationalVec> a_;
  RationalVec b_;
  RationalVec c_;
};

LpResult solve_lp(std::vector<RationalVec> rows, RationalVec rhs, RationalVec cost);

}  // namespace graphsep
