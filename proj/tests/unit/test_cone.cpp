#include <gtest/gtest.h>

#include "ccones/cone.hpp"
#include "ccones/errors.hpp"
#include "ccones/sampling.hpp"
#include "test_util.hpp"

using namespace ccones;
using namespace ccones::testing;

namespace {

ConeObject make_bool() { return make_polyhedral_object(2, bool_p(), bool_q(), "Bool"); }

}  // namespace

TEST(Validate, BoolPassesEveryCheck) {
  ValidationReport r = validate_object(make_bool());
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
  EXPECT_TRUE(r.ok());
}

TEST(Validate, NonSpanningGeneratorsReportCoordinate) {
  ConeObject o = make_polyhedral_object(2, Generators{V({"1", "0"})}, std::nullopt, "half");
  ValidationReport r = validate_object(o);
  const ValidationCheck* c = r.find("p_spanning");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_EQ(c->witness, "coordinate 1");
}

TEST(Validate, DominatedGeneratorFailsCanonicalForm) {
  ConeObject o = make_polyhedral_object(2, bool_p(), Generators{V({"1", "1"}), V({"1/2", "1/2"})}, "bad");
  ValidationReport r = validate_object(o);
  const ValidationCheck* c = r.find("q_canonical");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_NE(c->witness.find("(1/2,1/2)"), std::string::npos);
}

TEST(Validate, WrongPolarIsReported) {
  ConeObject o = make_polyhedral_object(2, bool_p(), Generators{V({"1", "1/2"})}, "bad");
  EXPECT_FALSE(validate_object(o).ok());
}

TEST(Norms, BoolExamples) {
  ConeObject b = make_bool();
  EXPECT_EQ(norm_primal(b, V({"1/2", "1/2"})), Rational(1));
  EXPECT_EQ(norm_primal(b, V({"0", "0"})), Rational(0));
  EXPECT_EQ(norm_primal(dual_object(b), V({"1", "1"})), Rational(1));
  EXPECT_EQ(norm_dual(b, V({"1", "1"})), Rational(1));
  EXPECT_EQ(gauge_norm(b, Side::kPrimal, V({"1/2", "1/2"})), Rational(1));
}

TEST(Norms, OutsideTheConeGivesWitness) {
  try {
    norm_primal(make_bool(), V({"1", "-1"}));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    ASSERT_EQ(e.witness().size(), 1u);
    EXPECT_EQ(e.witness()[0], "(0,1)");
  }
  EXPECT_THROW(Element(make_bool(), V({"-1", "0"})), DomainError);
  EXPECT_THROW(norm_primal(make_bool(), V({"1"})), DimensionError);
}

TEST(Dual, SwapsSidesAndIsAnInvolution) {
  ConeObject b = make_bool();
  ConeObject d = dual_object(b);
  EXPECT_EQ(*d.p_ball_gens(), bool_q());
  EXPECT_EQ(*d.q_ball_gens(), bool_p());
  EXPECT_EQ(dual_object(d).node_ptr(), b.node_ptr());
  EXPECT_TRUE(objects_equal(dual_object(d), b));
}

TEST(Dual, UnitIsSelfDual) {
  ConeObject u = unit_object();
  EXPECT_EQ(u.dim(), 1u);
  EXPECT_EQ(*u.p_ball_gens(), Generators{V({"1"})});
  EXPECT_TRUE(objects_equal(dual_object(u), u));
}

TEST(Norms, GaugeEqualsSupOverDualGenerators) {
  Sampler s(3);
  for (int t = 0; t < 50; ++t) {
    ConeObject o = s.polyhedral_object(s.between(1, 4), 6, "o");
    ASSERT_TRUE(validate_object(o).ok());
    VecQ x = s.nonnegative_vector(o.dim(), 7);
    EXPECT_EQ(gauge_norm(o, Side::kPrimal, x), sup_pairing_norm(o, Side::kPrimal, x));
    EXPECT_EQ(gauge_norm(o, Side::kDual, x), sup_pairing_norm(o, Side::kDual, x));
    // homogeneity and ball membership
    EXPECT_EQ(norm_primal(o, scaled(x, 3)), 3 * norm_primal(o, x));
    VecQ p = s.ball_point(o);
    EXPECT_LE(norm_primal(o, p), 1);
  }
}
