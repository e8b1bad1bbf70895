#include <gtest/gtest.h>

#include "ccones/backends.hpp"
#include "ccones/errors.hpp"
#include "ccones/sampling.hpp"
#include "test_util.hpp"

using namespace ccones;
using namespace ccones::testing;

TEST(Pcs, StandardObjects) {
  ConeObject b = make_polyhedral_object(2, bool_p(), bool_q(), "Bool");
  EXPECT_TRUE(objects_equal(simplex_pcs(2), b));
  EXPECT_TRUE(objects_equal(cube_pcs(2), dual_object(b)));
  ConeObject o = pcs_object({V({"1", "1"})}, 2, "box");
  EXPECT_TRUE(objects_equal(dual_object(o), simplex_pcs(2)));
  for (std::size_t d = 1; d <= 4; ++d) {
    EXPECT_TRUE(validate_object(simplex_pcs(d)).ok());
    EXPECT_TRUE(validate_object(cube_pcs(d)).ok());
  }
}

TEST(Pcs, RejectsBadGenerators) {
  EXPECT_THROW(pcs_object({V({"1", "0"})}, 2, "x"), DomainError);
  EXPECT_THROW(pcs_object({V({"1", "-1"})}, 2, "x"), DomainError);
  EXPECT_THROW(pcs_object({V({"1"})}, 2, "x"), DimensionError);
}

TEST(Pcs, MatrixExamples) {
  ConeObject b = simplex_pcs(2);
  PcsMorphism id = pcs_matrix_to_morphism(MatQ::identity(2), b, b);
  EXPECT_EQ(id.morphism.matrix(), identity(b).matrix());
  PcsMorphism half = pcs_matrix_to_morphism(M({{"1/2", "1/2"}, {"0", "1"}}), b, b);
  EXPECT_EQ(half.norm, Rational(1));
  EXPECT_TRUE(half.contraction);
  EXPECT_EQ(morphism_to_pcs_matrix(half.morphism), M({{"1/2", "1/2"}, {"0", "1"}}));
  PcsMorphism two = pcs_matrix_to_morphism(M({{"2", "0"}, {"0", "1"}}), b, b);
  EXPECT_EQ(two.norm, Rational(2));
  EXPECT_FALSE(two.contraction);
  // (u e_i)_j = u_ij
  MatQ u = M({{"1/4", "1/2"}, {"0", "1/3"}});
  PcsMorphism pm = pcs_matrix_to_morphism(u, b, b);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(pm.morphism.apply(unit_vector(2, i)), u.row(i));
}

TEST(Pcs, RoundTripOnSamples) {
  Sampler s(61);
  for (int t = 0; t < 50; ++t) {
    const std::size_t da = s.between(1, 3), db = s.between(1, 3);
    ConeObject a = pcs_object(s.spanning_generators(da, 4), da, "a");
    ConeObject b = pcs_object(s.spanning_generators(db, 4), db, "b");
    MatQ u = morphism_to_pcs_matrix(s.contraction(a, b));
    PcsMorphism pm = pcs_matrix_to_morphism(u, a, b);
    EXPECT_EQ(morphism_to_pcs_matrix(pm.morphism), u);
    EXPECT_TRUE(pm.contraction);
  }
}

TEST(Lattice, PcsAndCounterexample) {
  EXPECT_TRUE(lattice_test(simplex_pcs(3)).lattice);
  LatticeReport r = lattice_test(Generators{V({"1", "0", "0"}), V({"0", "1", "0"}), V({"1", "0", "1"}), V({"0", "1", "1"})});
  EXPECT_FALSE(r.lattice);
  EXPECT_EQ(r.extreme_rays, 4u);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_THROW(lattice_test(qcs_object(2)), CapabilityError);
}

TEST(Spectral, Examples) {
  MatD d = MatD::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  EXPECT_NEAR(qcs_trace_norm(d), 3.0, kPsdTolerance);
  EXPECT_NEAR(qcs_op_norm(MatD::Ones(2, 2)), 2.0, kPsdTolerance);
  for (int n = 1; n <= 8; ++n) EXPECT_NEAR(qcs_trace_norm(MatD::Identity(n, n) / n), 1.0, kPsdTolerance);
  MatD bad = MatD::Identity(2, 2);
  bad(1, 1) = -1;
  EXPECT_THROW(qcs_trace_norm(bad), DomainError);
  MatD asym = MatD::Identity(2, 2);
  asym(0, 1) = 1;
  EXPECT_THROW(qcs_op_norm(asym), DomainError);
}

TEST(Spectral, DualityOnSamples) {
  Sampler s(67);
  for (int t = 0; t < 100; ++t) {
    MatD m = s.psd_matrix(s.between(1, 8));
    EXPECT_NEAR(qcs_trace_norm(m), m.trace(), kPsdTolerance);
    SpectralDualityCheck c = spectral_duality_check(m);
    EXPECT_TRUE(c.ok) << c.trace_gap << " " << c.op_gap;
  }
}

TEST(Spectral, PackingAndObjectNorms) {
  ConeObject q = qcs_object(2);
  EXPECT_EQ(q.dim(), 3u);
  EXPECT_NEAR(spectral_norm(q, Side::kPrimal, {2, 1, 2}), 4.0, kPsdTolerance);
  EXPECT_NEAR(spectral_norm(q, Side::kDual, {2, 1, 2}), 3.0, kPsdTolerance);
  EXPECT_NEAR(spectral_norm(dual_object(q), Side::kPrimal, {2, 1, 2}), 3.0, kPsdTolerance);
  MatD m = unpack_symmetric({1, 2, 3}, 2);
  EXPECT_EQ(pack_symmetric(m), (std::vector<double>{1, 2, 3}));
}
