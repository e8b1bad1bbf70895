#ifndef CCONES_ORACLE_HPP
#define CCONES_ORACLE_HPP

#include <cstddef>
#include <string>

#include "ccones/numeric.hpp"
#include "ccones/polar.hpp"
#include "ccones/symmetric.hpp"

namespace ccones {

struct OracleParams {
  std::size_t grid_resolution = 1000;     // simplex grid step is 1/resolution
  std::size_t max_grid_points = 200000;   // resolution is lowered to stay below this
  std::size_t ascent_iterations = 200;
  long rational_denominator = 1000000;    // ascent points are rounded to this
  std::size_t max_bernstein_terms = 4000;  // caps degree elevation
  std::size_t max_elevation = 128;
  std::size_t max_cells = 256;            // subdivision budget per maximization
  std::size_t column_rounds = 6;          // column generation for the !-norm
  std::size_t column_grid = 8;
};

// Certified two-sided bound on a supremum. `argmax` attains `lower`.
struct Bracket {
  Rational lower;
  Rational upper;
  VecQ argmax;
  std::string method;

  bool exact() const { return lower == upper; }
};

// sup of p over the downward-closed convex hull of gens, for p with
// nonnegative coefficients. By monotonicity the sup is attained on the convex
// hull itself, so p is pulled back to the simplex of mixing weights. The
// lower bound is an exact evaluation at a point found by grid search and
// multiplicative ascent; the upper bound is the largest Bernstein coefficient
// after homogenization and degree elevation, tightened by branch and bound
// over subsimplices. Degree <= 1 and a single generator are solved exactly.
Bracket maximize_over_hull(const Polynomial& p, const Generators& gens, const OracleParams& params = {});

// Largest Bernstein coefficient of the pullback; an upper bound on the sup.
Rational bernstein_upper_bound(const Polynomial& p, const Generators& gens, const OracleParams& params = {});

}  // namespace ccones

#endif  // CCONES_ORACLE_HPP
