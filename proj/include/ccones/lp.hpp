#ifndef CCONES_LP_HPP
#define CCONES_LP_HPP

#include <vector>

#include "ccones/numeric.hpp"

namespace ccones {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  VecQ coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize <objective, x> subject to the constraints. Variables flagged
// nonnegative get x_i >= 0; the others are free. An empty `nonnegative`
// vector means every variable is nonnegative.
struct LpProblem {
  VecQ objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  VecQ witness;
};

// Exact two-phase primal simplex with Bland's pivoting rule. Deterministic,
// and terminates on degenerate problems.
LpResult lp_maximize(const LpProblem& problem);

// Checks every constraint exactly; used by tests and by debug assertions.
bool lp_satisfies(const LpProblem& problem, const VecQ& x);

const char* to_string(LpStatus status);

}  // namespace ccones

#endif  // CCONES_LP_HPP
