#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrat/sequences.hpp"

using qrat::Int;
using qrat::IntPoly;
using qrat::Rational;
using qrat::SequenceKind;

namespace {

using Rows = std::vector<std::vector<Int>>;

Rows rows(std::initializer_list<std::initializer_list<int>> r) {
  Rows out;
  for (const auto& row : r) out.emplace_back(row.begin(), row.end());
  return out;
}

Rows reversed(Rows r) {
  for (auto& row : r) std::reverse(row.begin(), row.end());
  return r;
}

const Rows kFib = rows({{1},
                        {1, 1},
                        {1, 1, 1},
                        {1, 2, 1, 1},
                        {1, 2, 2, 2, 1},
                        {1, 3, 3, 3, 2, 1},
                        {1, 3, 4, 5, 4, 3, 1},
                        {1, 4, 6, 7, 7, 5, 3, 1},
                        {1, 4, 7, 10, 11, 10, 7, 4, 1}});

const Rows kPell = rows({{1},
                         {1, 1},
                         {1, 2, 1, 1},
                         {1, 2, 3, 3, 2, 1},
                         {1, 3, 5, 6, 6, 5, 2, 1},
                         {1, 3, 7, 11, 13, 13, 11, 7, 3, 1},
                         {1, 4, 10, 18, 25, 29, 29, 24, 16, 9, 3, 1},
                         {1, 4, 12, 25, 41, 56, 65, 65, 56, 41, 25, 12, 4, 1},
                         {1, 5, 16, 37, 67, 101, 131, 148, 146, 126, 95, 61, 32, 14, 4, 1},
                         {1, 5, 18, 46, 94, 160, 233, 297, 335, 335, 297, 233, 160, 94, 46, 18, 5, 1}});

}  // namespace

TEST(Fibonacci, Examples) {
  EXPECT_EQ(qrat::q_fibonacci(5).first, IntPoly({1, 2, 1, 1}));
  EXPECT_EQ(qrat::q_fibonacci(5).second, IntPoly({1, 1, 2, 1}));
  const auto q = qrat::qdeform(Rational(8, 5));
  EXPECT_EQ(q.num, qrat::q_fibonacci(6).second);
  EXPECT_EQ(q.den, qrat::q_fibonacci(5).first);
  EXPECT_THROW(qrat::q_fibonacci(0), qrat::DomainError);
}

TEST(Pell, Examples) {
  EXPECT_EQ(qrat::q_pell(4).first, IntPoly({1, 2, 3, 3, 2, 1}));
  EXPECT_EQ(qrat::q_pell(5).first, IntPoly({1, 3, 5, 6, 6, 5, 2, 1}));
  EXPECT_EQ(qrat::q_pell(3).second, IntPoly({1, 1, 2, 1}));
  EXPECT_EQ(qrat::q_pell(3).second, IntPoly({0, 1, 1}) * IntPoly({1, 1}) + IntPoly({1}));
  EXPECT_EQ(qrat::pell_convergent_expansion(2).a, (std::vector<std::int64_t>{2, 2}));
  EXPECT_THROW(qrat::q_pell(0), qrat::DomainError);
}

TEST(Triangles, MatchPrintedRows) {
  EXPECT_EQ(qrat::triangle_rows(SequenceKind::Fib, 9), kFib);
  EXPECT_EQ(qrat::triangle_rows(SequenceKind::FibMirror, 9), reversed(kFib));
  EXPECT_EQ(qrat::triangle_rows(SequenceKind::Pell, 10), kPell);
  EXPECT_EQ(qrat::triangle_rows(SequenceKind::PellMirror, 10), reversed(kPell));
  EXPECT_THROW(qrat::triangle_rows(SequenceKind::Fib, 0), qrat::DomainError);
}

TEST(Triangles, RowSumsAreClassicalNumbers) {
  const auto fib = qrat::fibonacci_numbers(25);
  const auto pell = qrat::pell_numbers(25);
  EXPECT_EQ(pell[10], 2378);
  const auto fr = qrat::triangle_rows(SequenceKind::Fib, 24);
  const auto pr = qrat::triangle_rows(SequenceKind::Pell, 24);
  for (std::size_t i = 0; i < 24; ++i) {
    EXPECT_EQ(std::accumulate(fr[i].begin(), fr[i].end(), Int(0)), fib[i + 2]);
    EXPECT_EQ(std::accumulate(pr[i].begin(), pr[i].end(), Int(0)), pell[i + 1]);
  }
}

TEST(Fibonacci, CountsClosuresOfTheFence) {
  const auto f = qrat::fibonacci_numbers(16);
  for (std::size_t n = 2; n <= 14; ++n) {
    const auto e = qrat::expand_regular(Rational(f[n + 1], f[n]));
    auto counts = oracle::closure_counts(qrat::build_graph_prime(e));
    EXPECT_EQ(IntPoly(counts), qrat::q_fibonacci(static_cast<int>(n)).first) << n;
    counts = oracle::closure_counts(qrat::build_graph(e));
    EXPECT_EQ(IntPoly(counts), qrat::q_fibonacci(static_cast<int>(n) + 1).second) << n;
  }
}

TEST(Pell, CountsClosures) {
  const auto p = qrat::pell_numbers(10);
  for (int n = 2; n <= 8; ++n) {
    const auto g = qrat::build_graph(qrat::pell_convergent_expansion(n - 1));
    const auto counts = oracle::closure_counts(g);
    EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), Int(0)), p[static_cast<std::size_t>(n)]);
    EXPECT_EQ(IntPoly(counts), qrat::q_pell(n).first);
  }
}
