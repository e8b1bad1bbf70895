#include <gtest/gtest.h>

#include "ccones/backends.hpp"
#include "ccones/errors.hpp"
#include "ccones/mall.hpp"
#include "ccones/sampling.hpp"
#include "test_util.hpp"

using namespace ccones;
using namespace ccones::testing;

namespace {

ConeObject make_bool() { return make_polyhedral_object(2, bool_p(), bool_q(), "Bool"); }

}  // namespace

TEST(Tensor, BoolTensorBoolIsFourSimplex) {
  ConeObject t = tensor_obj(make_bool(), make_bool());
  EXPECT_EQ(t.dim(), 4u);
  Generators units;
  for (std::size_t i = 0; i < 4; ++i) units.push_back(unit_vector(4, i));
  std::sort(units.begin(), units.end());
  EXPECT_EQ(*t.p_ball_gens(), units);
  EXPECT_EQ(norm_primal(t, V({"1", "0", "0", "1"})), Rational(2));
}

TEST(Tensor, UnitIsNeutral) {
  ConeObject b = make_bool();
  ConeObject t = tensor_obj(unit_object(), b);
  EXPECT_EQ(*t.p_ball_gens(), *b.p_ball_gens());
  EXPECT_EQ(*t.q_ball_gens(), *b.q_ball_gens());
  EXPECT_EQ(left_unitor(b).matrix(), MatQ::identity(2));
}

TEST(Tensor, CotensorDuality) {
  ConeObject b = make_bool();
  ConeObject c = cube_pcs(3);
  EXPECT_TRUE(objects_equal(dual_object(tensor_obj(b, c)), cotensor_obj(dual_object(b), dual_object(c))));
}

TEST(Hom, MorphismNorms) {
  ConeObject b = make_bool();
  EXPECT_EQ(identity(b).norm(), Rational(1));
  EXPECT_EQ(Morphism(b, b, M({{"1", "1"}, {"1", "1"}})).norm(), Rational(2));
  EXPECT_THROW(Morphism(b, b, M({{"1", "-1"}, {"0", "1"}})), DomainError);
  EXPECT_THROW(Morphism(b, b, M({{"1"}})), DimensionError);
}

TEST(Additive, ProductAndCoproductNorms) {
  ConeObject b = make_bool();
  const VecQ x = V({"1", "0", "0", "1"});
  EXPECT_EQ(norm_primal(product_obj(b, b), x), Rational(1));
  EXPECT_EQ(norm_primal(coproduct_obj(b, b), x), Rational(2));
}

TEST(Additive, ZeroObjectIsNeutral) {
  ConeObject b = make_bool();
  ConeObject p = product_obj(b, zero_object());
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_EQ(*p.p_ball_gens(), *b.p_ball_gens());
  EXPECT_EQ(*p.q_ball_gens(), *b.q_ball_gens());
}

TEST(Morphisms, CompositionAndAdjoint) {
  ConeObject b = make_bool();
  Morphism f(b, b, M({{"1", "0"}, {"1", "1"}}));
  EXPECT_EQ(compose(identity(b), f).matrix(), f.matrix());
  Morphism fa = adjoint(f);
  EXPECT_EQ(fa.matrix(), M({{"1", "1"}, {"0", "1"}}));
  EXPECT_TRUE(objects_equal(fa.source(), dual_object(b)));
  EXPECT_EQ(fa.norm(), f.norm());
  EXPECT_EQ(adjoint(fa).matrix(), f.matrix());
  EXPECT_THROW(compose(f, Morphism(cube_pcs(3), cube_pcs(3), MatQ::identity(3))), DimensionError);
}

TEST(Morphisms, TensorNormIsMultiplicative) {
  Sampler s(5);
  for (int t = 0; t < 20; ++t) {
    ConeObject a = s.polyhedral_object(s.between(1, 2), 3, "a");
    ConeObject b = s.polyhedral_object(s.between(1, 2), 3, "b");
    Morphism f = s.contraction(a, b, 4, s.fraction(3) + 1);
    Morphism g = s.contraction(b, a, 4, s.fraction(3) + 1);
    EXPECT_EQ(tensor_mor(f, g).norm(), f.norm() * g.norm());
    EXPECT_LE(compose(g, f).norm(), g.norm() * f.norm());
  }
}

TEST(Curry, FlattenedIdentity) {
  ConeObject b = make_bool();
  // 1 (x) Bool -> Bool, the unitor, curries to the element of hom(Bool, Bool)
  // given by the identity matrix.
  Morphism f(tensor_obj(unit_object(), b), b, MatQ::identity(2));
  Morphism g = curry(f);
  EXPECT_EQ(g.source().dim(), 1u);
  EXPECT_EQ(g.matrix().col(0), V({"1", "0", "0", "1"}));
  EXPECT_EQ(uncurry(g).matrix(), f.matrix());
}

TEST(Curry, BijectionPreservesNorms) {
  Sampler s(9);
  for (int t = 0; t < 50; ++t) {
    ConeObject a = s.polyhedral_object(s.between(1, 2), 3, "a");
    ConeObject b = s.polyhedral_object(s.between(1, 2), 3, "b");
    ConeObject c = s.polyhedral_object(s.between(1, 2), 3, "c");
    Morphism f(tensor_obj(a, b), c, s.nonnegative_matrix(c.dim(), a.dim() * b.dim(), 4));
    Morphism g = curry(f);
    EXPECT_EQ(uncurry(g).matrix(), f.matrix());
    EXPECT_EQ(g.norm(), f.norm());
  }
}

TEST(Structural, CoherenceOnBool) {
  ConeObject b = make_bool();
  EXPECT_EQ(compose(sym(b, b), sym(b, b)).matrix(), MatQ::identity(4));
  EXPECT_EQ(pair(proj1(b, b), proj2(b, b)).matrix(), MatQ::identity(4));
  EXPECT_EQ(copair(inj1(b, b), inj2(b, b)).matrix(), MatQ::identity(4));
  for (const char* name : {"sym", "proj1", "inj2", "eval"}) EXPECT_LE(structural(name, {b, b}).norm(), 1) << name;
  EXPECT_LE(structural("assoc", {b, b, b}).norm(), 1);
  EXPECT_LE(structural("lunit", {b}).norm(), 1);
  EXPECT_THROW(structural("nope", {b}), DomainError);
}

TEST(Structural, EvalAfterCurry) {
  Sampler s(13);
  for (int t = 0; t < 10; ++t) {
    ConeObject a = s.polyhedral_object(2, 3, "a");
    ConeObject b = s.polyhedral_object(2, 3, "b");
    ConeObject c = s.polyhedral_object(2, 3, "c");
    Morphism f = s.contraction(tensor_obj(a, b), c);
    EXPECT_EQ(compose(eval(b, c), tensor_mor(curry(f), identity(b))).matrix(), f.matrix());
  }
}

TEST(Spectral, RejectedByConnectives) {
  ConeObject q = qcs_object(2);
  EXPECT_THROW(tensor_obj(q, q), CapabilityError);
  EXPECT_THROW(product_obj(q, make_bool()), CapabilityError);
}
