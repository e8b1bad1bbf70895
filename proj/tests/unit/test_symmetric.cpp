#include <gtest/gtest.h>

#include "ccones/errors.hpp"
#include "ccones/sampling.hpp"
#include "ccones/symmetric.hpp"
#include "test_util.hpp"

using namespace ccones;
using namespace ccones::testing;

TEST(MultisetBasis, OrderAndMultiplicities) {
  MultisetBasis b(2, 2);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.indices(0), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(b.indices(1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(b.indices(2), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(b.multiplicity(1), 2);
  EXPECT_EQ(b.index_of(Exponent{1, 1}), 1u);
  EXPECT_EQ(MultisetBasis(3, 3).size(), 10u);
  EXPECT_EQ(MultisetBasis(4, 0).size(), 1u);
}

TEST(GradedBasis, Layout) {
  GradedBasis g(2, 3);
  EXPECT_EQ(g.size(), 1u + 2 + 3 + 4);
  EXPECT_EQ(g.offset(2), 3u);
  EXPECT_EQ(g.locate(4), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(g.exponent(4), (Exponent{1, 1}));
  EXPECT_EQ(g.multiplicity(4), 2);
}

TEST(SymTensor, FullRoundTripAndAsymmetryCheck) {
  Sampler s(21);
  for (int t = 0; t < 10; ++t) {
    const std::size_t dim = s.between(1, 3), deg = s.between(1, 3);
    MultisetBasis b(dim, deg);
    SymTensor x{dim, deg, Variance::kFunctional, s.nonnegative_vector(b.size(), 5)};
    EXPECT_EQ(SymTensor::from_full(dim, deg, Variance::kFunctional, x.to_full()).coords, x.coords);
    SymTensor y{dim, deg, Variance::kTensor, s.nonnegative_vector(b.size(), 5)};
    EXPECT_EQ(SymTensor::from_full(dim, deg, Variance::kTensor, y.to_full()).coords, y.coords);
  }
  EXPECT_THROW(SymTensor::from_full(2, 2, Variance::kFunctional, V({"0", "1", "0", "0"})), DomainError);
}

// The pairing of a functional with x^{(x)n} is the polynomial f(x, ..., x),
// checked against the full multilinear evaluation.
TEST(SymTensor, PowerPairingMatchesMultilinearEvaluation) {
  Sampler s(22);
  for (int t = 0; t < 20; ++t) {
    const std::size_t dim = s.between(1, 3), deg = s.between(1, 3);
    MultisetBasis b(dim, deg);
    SymTensor f{dim, deg, Variance::kFunctional, s.nonnegative_vector(b.size(), 5)};
    VecQ x = s.nonnegative_vector(dim, 4);
    std::vector<VecQ> args(deg, x);
    EXPECT_EQ(dot(f.coords, symmetrized_product(args, b)), multilinear_eval(f, args));
  }
}

TEST(Polynomial, ArithmeticAndSubstitution) {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  Polynomial p = x.times(y) + x;
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(p.evaluate(V({"2", "3"})), Rational(8));
  Polynomial q = substitute(p, {x + y, y});  // (x+y)y + x + y
  EXPECT_EQ(q.evaluate(V({"1", "2"})), Rational(9));
  EXPECT_EQ(p.truncated(1), x);
  EXPECT_EQ(x.times(x, 1).degree(), 0u);
  EXPECT_TRUE(p.has_nonnegative_coefficients());
  EXPECT_FALSE(p.scaled(-1).has_nonnegative_coefficients());
}

TEST(Polynomial, MatrixRoundTrip) {
  GradedBasis in(2, 2);
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  std::vector<Polynomial> rows{x.times(y).scaled(3) + Polynomial::constant(2, 1)};
  MatQ m = matrix_from_polys(rows, in);
  // entry = coefficient / multiplicity, so the x*y entry is 3/2
  EXPECT_EQ(m(0, 0), Rational(1));
  EXPECT_EQ(m(0, 4), Rational(3, 2));
  EXPECT_EQ(series_polynomial(m.row(0), in), rows[0]);
  EXPECT_THROW(matrix_from_polys({x.times(x).times(y)}, in), DomainError);
}
