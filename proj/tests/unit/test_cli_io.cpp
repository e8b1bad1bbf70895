#include <gtest/gtest.h>

#include "ccones/backends.hpp"
#include "ccones/checks.hpp"
#include "ccones/errors.hpp"
#include "ccones/serialize.hpp"
#include "test_util.hpp"

using namespace ccones;
using namespace ccones::testing;

TEST(Json, RationalsAndVectors) {
  EXPECT_EQ(to_json(Rational(1, 2)).get<std::string>(), "1/2");
  EXPECT_EQ(rational_from_json(Json("3/4")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(Json(2)), Rational(2));
  EXPECT_EQ(rational_from_json(Json(0.25)), Rational(1, 4));
  EXPECT_THROW(rational_from_json(Json::array()), DomainError);
  const VecQ v = V({"1/3", "0", "5"});
  EXPECT_EQ(vector_from_json(to_json(v)), v);
  const MatQ m = M({{"1", "1/2"}, {"0", "2"}});
  EXPECT_EQ(matrix_from_json(to_json(m)), m);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1"], ["1", "2"]])")), DimensionError);
}

TEST(Json, Environment) {
  Json j = Json::parse(R"({"atoms": {
    "a": {"kind": "pcs", "dim": 2, "ball_gens": [[1, 0], [0, 1]]},
    "c": {"kind": "polyhedral", "p_gens": [["1/2", "1"], ["1", "1/2"]]},
    "m": {"kind": "qcs", "n": 3}}})");
  Environment env = environment_from_json(j);
  ASSERT_EQ(env.size(), 3u);
  EXPECT_TRUE(objects_equal(env.at("a"), simplex_pcs(2)));
  EXPECT_EQ(env.at("c").q_ball_gens()->size(), 3u);
  EXPECT_EQ(env.at("m").dim(), 6u);
  EXPECT_THROW(environment_from_json(Json::parse(R"({"atoms": {"x": {"kind": "other"}}})")), DomainError);
  EXPECT_THROW(environment_from_json(Json::parse(R"({"nothing": 1})")), DomainError);
}

TEST(Json, DescribeObject) {
  Json d = describe_object(simplex_pcs(2));
  EXPECT_EQ(d["dim"], 2);
  EXPECT_EQ(d["norms"], "exact");
  EXPECT_EQ(d["q_gens"], Json::parse(R"([["1", "1"]])"));
  Json e = describe_object(bang_obj(simplex_pcs(2), 2));
  EXPECT_EQ(e["exponential"]["grade_dims"], Json::parse("[1, 2, 3]"));
  Json w = describe_object(whynot_obj(simplex_pcs(2), 2));
  EXPECT_EQ(w["exponential"]["kind"], "whynot");
}

TEST(Checks, ReportsAreDeterministic) {
  Json first = check_report(run_suite("mall", 5, 3), 5, 3);
  Json second = check_report(run_suite("mall", 5, 3), 5, 3);
  EXPECT_EQ(first.dump(), second.dump());
  EXPECT_EQ(first["schema"], 1);
  EXPECT_TRUE(first["passed"].get<bool>());
  EXPECT_THROW(run_suite("nope", 1, 1), DomainError);
}

TEST(Checks, EverySuitePasses) {
  for (const char* suite : {"pcs", "qcs", "exp"}) {
    for (const auto& r : run_suite(suite, 2, 3))
      for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << suite << "/" << c.name << " " << c.detail.dump();
  }
}
