#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrat/ptolemy.hpp"
#include "qrat/verify.hpp"

using qrat::IntPoly;
using qrat::LaurentPoly;
using qrat::Rational;

namespace {

Rational rat(long long r, long long s) { return Rational(qrat::Int(r), qrat::Int(s)); }

void expect_matches_oracle(int n, const std::vector<qrat::WeightedEdge>& edges, const qrat::PtolemyWeights& w,
                           const std::string& what) {
  std::vector<std::tuple<int, int, oracle::Laurent>> init;
  for (const auto& e : edges) init.emplace_back(e.i, e.j, oracle::from(e.weight));
  const auto table = oracle::ptolemy_propagate(n, init);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& x = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      ASSERT_TRUE(x.has_value()) << what << " x_" << i << "," << j;
      EXPECT_TRUE(oracle::same(*x, w.get(i, j))) << what << " x_" << i << "," << j;
    }
}

}  // namespace

TEST(Ptolemy, FiveHalves) {
  const auto res = qrat::ptolemy_solve(rat(5, 2));
  EXPECT_EQ(res.n, 6);
  EXPECT_EQ(res.k, 2);
  EXPECT_EQ(qrat::q_pow(3) * res.x_0k, LaurentPoly(IntPoly({1, 2, 1, 1})));
  EXPECT_EQ(qrat::q_pow(3) * res.x_1k, LaurentPoly(IntPoly({1, 1})));
}

TEST(Ptolemy, SevenFifths) {
  const auto res = qrat::ptolemy_solve(rat(7, 5));
  EXPECT_EQ(qrat::q_pow(res.n - 3) * res.x_1k, LaurentPoly(IntPoly({1, 1, 2, 1})));
}

TEST(Ptolemy, FanExample) {
  EXPECT_EQ(qrat::ptolemy_fan(3, 0), qrat::q_int(3) * qrat::q_pow(-2));
  EXPECT_THROW(qrat::ptolemy_fan(1, 0), qrat::DomainError);
}

TEST(Ptolemy, InitialWeightsShape) {
  const auto t = qrat::triangulation_build(qrat::expand_regular(rat(7, 5)));
  const auto edges = qrat::ptolemy_initial_weights(t);
  ASSERT_EQ(static_cast<int>(edges.size()), 2 * t.n - 3);
  for (const auto& e : edges) EXPECT_TRUE(e.weight.as_monomial().has_value());
}

TEST(Ptolemy, AgreesWithFlipPropagationAndQdeform) {
  for (const auto& x : qrat::rationals_above_one(20)) {
    const auto t = qrat::triangulation_build(qrat::expand_regular(x));
    const auto edges = qrat::ptolemy_initial_weights(t);
    const auto res = qrat::ptolemy_solve(x);
    expect_matches_oracle(t.n, edges, res.weights, x.to_string());
    const auto q = qrat::qdeform(x);
    EXPECT_EQ(qrat::q_pow(res.n - 3) * res.x_0k, LaurentPoly(q.num)) << x.to_string();
    EXPECT_EQ(qrat::q_pow(res.n - 3) * res.x_1k, LaurentPoly(q.den)) << x.to_string();
    EXPECT_TRUE(res.weights.relations_hold()) << x.to_string();
  }
}

TEST(Ptolemy, FanAgreesWithFlipPropagation) {
  for (int c = 2; c <= 8; ++c)
    for (long long beta = -2; beta <= 3; ++beta) {
      std::vector<qrat::WeightedEdge> edges;
      edges.push_back({0, c + 1, LaurentPoly::monomial(-beta)});
      edges.push_back({0, 1, LaurentPoly::constant(1)});
      for (int t = 1; t <= c - 2; ++t) edges.push_back({t, t + 1, LaurentPoly::monomial(beta + t)});
      edges.push_back({c - 1, c, LaurentPoly::constant(1)});
      edges.push_back({c, c + 1, LaurentPoly::monomial(-(beta + c - 1))});
      for (int t = 1; t <= c - 1; ++t) edges.push_back({c + 1, t, LaurentPoly::constant(1)});
      const auto w = qrat::ptolemy_complete(c + 2, edges);
      expect_matches_oracle(c + 2, edges, w, "fan c=" + std::to_string(c));
      EXPECT_EQ(qrat::ptolemy_fan(c, beta), w.get(0, c));
      EXPECT_TRUE(w.relations_hold());
    }
}

TEST(Ptolemy, RejectsBadInput) {
  EXPECT_THROW(qrat::ptolemy_complete(2, {}), qrat::DomainError);
  EXPECT_THROW(qrat::ptolemy_complete(5, {{0, 1, LaurentPoly::constant(1)}}), qrat::DomainError);
}
