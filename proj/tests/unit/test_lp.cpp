#include <gtest/gtest.h>

#include "ccones/lp.hpp"
#include "ccones/sampling.hpp"
#include "test_util.hpp"

using namespace ccones;
using namespace ccones::testing;

namespace {

LinearConstraint le(VecQ c, Rational rhs) { return {std::move(c), Relation::kLessEqual, std::move(rhs)}; }

}  // namespace

TEST(Lp, SimplexFaceWithBlandTieBreak) {
  LpProblem p{V({"1", "1"}), {le(V({"1", "1"}), 1)}, {}};
  LpResult r = lp_maximize(p);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Rational(1));
  EXPECT_EQ(r.witness, V({"1", "0"}));
}

TEST(Lp, Unbounded) {
  LpProblem p{V({"1"}), {}, {}};
  EXPECT_EQ(lp_maximize(p).status, LpStatus::kUnbounded);
}

TEST(Lp, Infeasible) {
  LpProblem p{V({"1"}), {le(V({"1"}), -1)}, {}};
  EXPECT_EQ(lp_maximize(p).status, LpStatus::kInfeasible);
}

TEST(Lp, EqualityAndFreeVariables) {
  // max x - y, x + y = 1, y free and >= -2 via constraint
  LpProblem p{V({"1", "-1"}),
              {{V({"1", "1"}), Relation::kEqual, 1}, {V({"0", "1"}), Relation::kGreaterEqual, -2}},
              {true, false}};
  LpResult r = lp_maximize(p);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Rational(5));
  EXPECT_EQ(r.witness, V({"3", "-2"}));
}

TEST(Lp, DegenerateProblemTerminates) {
  // Beale's cycling example for the textbook rule.
  LpProblem p{V({"3/4", "-150", "1/50", "-6"}),
              {le(V({"1/4", "-60", "-1/25", "9"}), 0), le(V({"1/2", "-90", "-1/50", "3"}), 0), le(V({"0", "0", "1", "0"}), 1)},
              {}};
  LpResult r = lp_maximize(p);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Rational(1, 20));
}

// Strong duality against an independently solved dual LP.
TEST(Lp, PrimalAndDualValuesAgree) {
  Sampler s(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = s.between(1, 4), m = s.between(1, 4);
    MatQ a = s.nonnegative_matrix(m, n, 5);
    VecQ b = s.nonnegative_vector(m, 5), c = s.nonnegative_vector(n, 5);
    for (auto& x : b) x += 1;
    for (std::size_t j = 0; j < n; ++j) a(s.index(m), j) += 1;  // every column bounded
    LpProblem primal{c, {}, {}};
    for (std::size_t i = 0; i < m; ++i) primal.constraints.push_back(le(a.row(i), b[i]));
    // min b.y s.t. A^T y >= c, y >= 0, written as max -b.y
    LpProblem dual{scaled(b, -1), {}, {}};
    for (std::size_t j = 0; j < n; ++j) dual.constraints.push_back({a.col(j), Relation::kGreaterEqual, c[j]});
    LpResult rp = lp_maximize(primal), rd = lp_maximize(dual);
    ASSERT_EQ(rp.status, LpStatus::kOptimal);
    ASSERT_EQ(rd.status, LpStatus::kOptimal);
    EXPECT_EQ(rp.value, -rd.value);
    EXPECT_TRUE(lp_satisfies(primal, rp.witness));
    EXPECT_EQ(dot(c, rp.witness), rp.value);
  }
}
