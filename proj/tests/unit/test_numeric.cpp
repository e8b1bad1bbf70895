#include <gtest/gtest.h>

#include "ccones/errors.hpp"
#include "test_util.hpp"

using namespace ccones;
using namespace ccones::testing;

TEST(Numeric, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -4 "), Rational(-4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-1.5"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
}

TEST(Numeric, CanonicalStrings) {
  EXPECT_EQ(to_string(quotient(2, 4)), "1/2");
  EXPECT_EQ(to_string(quotient(3, -6)), "-1/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_EQ(to_string(V({"1/2", "0"})), "(1/2,0)");
}

TEST(Numeric, Combinatorics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
}

TEST(Numeric, MatrixAlgebra) {
  MatQ a = M({{"1", "2"}, {"3", "4"}});
  MatQ id = MatQ::identity(2);
  EXPECT_EQ(a * id, a);
  EXPECT_EQ(a.transpose(), M({{"1", "3"}, {"2", "4"}}));
  EXPECT_EQ(a.apply(V({"1", "1"})), V({"3", "7"}));
  MatQ k = kronecker(id, a);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(2, 2), Rational(1));
  EXPECT_EQ(k(0, 2), Rational(0));
  EXPECT_EQ(kronecker(V({"1", "2"}), V({"3", "5"})), V({"3", "5", "6", "10"}));
}

TEST(Numeric, VectorHelpers) {
  EXPECT_TRUE(dominated_by(V({"1/2", "0"}), V({"1", "0"})));
  EXPECT_FALSE(dominated_by(V({"1/2", "1"}), V({"1", "0"})));
  EXPECT_TRUE(is_nonnegative(V({"0", "1"})));
  EXPECT_FALSE(is_nonnegative(V({"-1/3", "1"})));
  EXPECT_EQ(dot(V({"1/2", "1/3"}), V({"2", "3"})), Rational(2));
}

TEST(Numeric, RoundToDenominator) {
  EXPECT_EQ(round_to_denominator(0.5, 1000), Rational(1, 2));
  EXPECT_EQ(round_to_denominator(1.0 / 3.0, 1000), Rational(333, 1000));
}
