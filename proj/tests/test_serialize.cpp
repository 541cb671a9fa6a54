#include <gtest/gtest.h>

#include "qrat/serialize.hpp"
#include "qrat/verify.hpp"

using qrat::Json;
using qrat::LaurentPoly;
using qrat::Rational;

TEST(Serialize, PolynomialsRoundTrip) {
  const LaurentPoly p(-3, {1, 0, -2, 5});
  const Json j = qrat::to_json(p);
  EXPECT_EQ(j.at("min_exp"), -3);
  EXPECT_EQ(j.at("coeffs"), Json({"1", "0", "-2", "5"}));
  EXPECT_EQ(qrat::laurent_from_json(j), p);
  const LaurentPoly big = LaurentPoly::monomial(2, qrat::Int("123456789012345678901234567890"));
  EXPECT_EQ(qrat::laurent_from_json(Json::parse(qrat::to_json(big).dump())), big);
  EXPECT_THROW(qrat::laurent_from_json(Json{{"min_exp", 0}, {"coeffs", {"x"}}}), qrat::ParseError);
  EXPECT_THROW(qrat::laurent_from_json(Json{{"min_exp", 0}}), qrat::ParseError);
  EXPECT_EQ(qrat::laurent_from_json(Json{{"coeffs", {"1"}}}), LaurentPoly::constant(1));
}

TEST(Serialize, QRationalsRoundTrip) {
  for (const auto& x : qrat::rationals_above_one(30)) {
    const auto q = qrat::qdeform(x);
    EXPECT_EQ(qrat::qrational_from_json(Json::parse(qrat::to_json(q).dump())), q);
  }
  const auto j = qrat::to_json(qrat::qdeform(Rational(5, 2)), true);
  EXPECT_EQ(j.at("r"), "5");
  EXPECT_EQ(j.at("reduced"), true);
  EXPECT_EQ(j.at("num").at("coeffs"), Json({"1", "2", "1", "1"}));
}

TEST(Serialize, ContinuedFractionsRoundTrip) {
  qrat::CFRegular reg;
  qrat::CFNegative neg;
  EXPECT_FALSE(qrat::cf_from_json(qrat::to_json(qrat::CFRegular{{2, 3, 1, 2}}), reg, neg));
  EXPECT_EQ(reg.a, (std::vector<std::int64_t>{2, 3, 1, 2}));
  EXPECT_TRUE(qrat::cf_from_json(qrat::to_json(qrat::CFNegative{{2, 2, 3}}), reg, neg));
  EXPECT_EQ(neg.c, (std::vector<std::int64_t>{2, 2, 3}));
  EXPECT_THROW(qrat::cf_from_json(Json{{"kind", "other"}, {"coeffs", {1}}}, reg, neg), qrat::ParseError);
  EXPECT_THROW(qrat::cf_from_json(Json{{"kind", "regular"}, {"coeffs", {1, 2, 1}}}, reg, neg), qrat::DomainError);
}

TEST(Serialize, StructuredValues) {
  const Json m = qrat::to_json(qrat::matrix_neg({3, 2}));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(qrat::laurent_from_json(m[0][0]), LaurentPoly(qrat::IntPoly({1, 2, 1, 1})));
  const Json t = qrat::to_json(qrat::farey_tree(1));
  EXPECT_EQ(t.at("nodes").size(), 3u);
  EXPECT_EQ(t.at("nodes")[0].at("value"), "2/1");
  EXPECT_TRUE(t.at("nodes")[1].contains("parent_edge_weight_exponent"));
  const Json q = qrat::to_json(qrat::quiddity_classify({1, 1, 1}));
  EXPECT_EQ(q.at("kind"), "Triangulation");
  EXPECT_EQ(q.at("sign"), -1);
  const Json g = qrat::to_json(qrat::build_graph(qrat::CFRegular{{2, 2}}));
  EXPECT_EQ(g.at("directions"), Json({"left", "right"}));
  const Json jp = qrat::to_json(qrat::jones_polynomial(Rational(8, 3)));
  EXPECT_EQ(jp.dump(), R"({"j":{"coeffs":["1","1","2","1","2","1"],"min_exp":0},"r":"8","s":"3"})");
}
