#include <gtest/gtest.h>

#include "ccones/backends.hpp"
#include "ccones/errors.hpp"
#include "ccones/formula.hpp"
#include "test_util.hpp"

using namespace ccones;
using namespace ccones::testing;

namespace {

std::string tree(const char* text) { return to_tree_string(*parse_formula(text)); }

Environment bool_env() { return {{"a", simplex_pcs(2)}, {"b", simplex_pcs(2)}, {"q", qcs_object(2)}}; }

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(tree("!a * b -o c"), "Lollipop(Tensor(Bang(a), b), c)");
  EXPECT_EQ(tree("a^^"), "Dual(Dual(a))");
  EXPECT_EQ(to_tree_string(*normalize_duals(parse_formula("a^^"))), "a");
  EXPECT_EQ(tree("a -o b -o c"), "Lollipop(a, Lollipop(b, c))");
}

TEST(Parse, Precedence) {
  EXPECT_EQ(tree("a * b | c & d + e"), "Plus(With(Par(Tensor(a, b), c), d), e)");
  EXPECT_EQ(tree("a + b -o c & d"), "Lollipop(Plus(a, b), With(c, d))");
  EXPECT_EQ(tree("!a^"), "Bang(Dual(a))");
  EXPECT_EQ(tree("?(a * b)^"), "WhyNot(Dual(Tensor(a, b)))");
  EXPECT_EQ(tree("1 * bot | 0 & top"), "With(Par(Tensor(One, Bot), Zero), Top)");
  EXPECT_EQ(tree("a * b * c"), "Tensor(Tensor(a, b), c)");
}

TEST(Parse, InfixRoundTrip) {
  for (const char* text : {"!a * b -o c", "(a & b)^ | ?c", "a -o b -o c", "1 + bot", "!(a & b)"}) {
    FormulaPtr f = parse_formula(text);
    EXPECT_TRUE(formulas_equal(*parse_formula(to_infix_string(*f)), *f)) << text;
  }
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_formula("a * * b");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_formula("(a"), ParseError);
  EXPECT_THROW(parse_formula("a $ b"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_THROW(parse_formula("a -"), ParseError);
}

TEST(Normalize, DeMorgan) {
  auto norm = [](const char* text) { return to_tree_string(*normalize_duals(parse_formula(text))); };
  EXPECT_EQ(norm("(a * b)^"), "Par(Dual(a), Dual(b))");
  EXPECT_EQ(norm("(a -o b)^"), "Tensor(a, Dual(b))");
  EXPECT_EQ(norm("(a & b)^"), "Plus(Dual(a), Dual(b))");
  EXPECT_EQ(norm("(!a)^"), "WhyNot(Dual(a))");
  EXPECT_EQ(norm("1^"), "Bot");
  EXPECT_EQ(norm("top^"), "Zero");
}

TEST(Interpret, Examples) {
  Environment env = bool_env();
  ConeObject ab = interpret(*parse_formula("a & b"), env);
  EXPECT_EQ(ab.dim(), 4u);
  EXPECT_EQ(norm_primal(ab, V({"1", "0", "0", "1"})), Rational(1));
  EXPECT_TRUE(objects_equal(interpret(*parse_formula("1"), env), unit_object()));
  ConeObject bang = interpret(*parse_formula("!(a & b)"), env, 2);
  EXPECT_EQ(bang.dim(), 15u);
  // grade m of !(a & b) has as many coordinates as pairs (k, n), k + n = m,
  // of grade-k and grade-n multisets of a and b
  GradedBasis full(4, 2), part(2, 2);
  for (std::size_t m = 0; m <= 2; ++m) {
    std::size_t count = 0;
    for (std::size_t k = 0; k <= m; ++k) count += part.grade(k).size() * part.grade(m - k).size();
    EXPECT_EQ(full.grade(m).size(), count);
  }
}

TEST(Interpret, DualNormalizationCommutes) {
  Environment env = bool_env();
  env.insert_or_assign("c", cube_pcs(2));
  for (const char* text : {"a * c", "a -o c", "(a & c) | b^", "a + 1", "bot -o c", "top & c^", "!a * c", "?(a & b)"}) {
    FormulaPtr f = parse_formula(text);
    FormulaPtr nf = normalize_duals(make_node(FormulaKind::kDual, {f}));
    ConeObject lhs = interpret(*nf, env, 2), rhs = dual_object(interpret(*f, env, 2));
    bool same = false;
    try {
      same = objects_equal(lhs, rhs);
    } catch (const CapabilityError&) {
      same = structurally_equal(lhs, rhs);
    }
    EXPECT_TRUE(same) << text;
  }
}

TEST(Interpret, Errors) {
  Environment env = bool_env();
  EXPECT_THROW(interpret(*parse_formula("a * z"), env), DomainError);
  EXPECT_THROW(interpret(*parse_formula("q * a"), env), CapabilityError);
  EXPECT_THROW(interpret(*parse_formula("!q"), env), CapabilityError);
  EXPECT_EQ(interpret(*parse_formula("q^"), env).dim(), 3u);
}
