// Acceptance suite: one PASS/FAIL line per criterion, exact equality throughout.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qrat/qrat.hpp"

using namespace qrat;

namespace {

using Failures = std::vector<std::string>;

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<void(Failures&)> body;
  bool blocking = true;
};

IntPoly poly(std::initializer_list<int> c) { return IntPoly(std::vector<Int>(c.begin(), c.end())); }

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

void expect_poly(Failures& f, const IntPoly& actual, const IntPoly& expected, const std::string& what) {
  if (actual != expected) f.push_back(what + ": expected " + expected.to_string() + ", got " + actual.to_string());
}

void expect_qrat(Failures& f, long long r, long long s, const IntPoly& num, const IntPoly& den) {
  const QRational q = qdeform(Rational(r, s));
  const std::string x = std::to_string(r) + "/" + std::to_string(s);
  expect_poly(f, q.num, num, x + " numerator");
  expect_poly(f, q.den, den, x + " denominator");
}

void absorb(Failures& f, const VerifyReport& r) {
  for (const auto& x : r.failures) f.push_back(r.suite + ": " + x.input + " expected " + x.expected + " got " + x.actual);
  if (r.cases == 0) f.push_back(r.suite + ": no cases ran");
}

VerifyReport suite(const std::string& name) {
  for (const auto& [n, fn] : verify_suites())
    if (n == name) return fn(VerifyOptions{});
  throw std::logic_error("unknown suite " + name);
}

// Coefficients 1, 2 (indices 1..m-1), 1, 1.
IntPoly family_two(int m) {
  std::vector<Int> c(static_cast<std::size_t>(m) + 2, Int(2));
  c[0] = 1;
  c[static_cast<std::size_t>(m)] = 1;
  c[static_cast<std::size_t>(m) + 1] = 1;
  return IntPoly(c);
}

// 1, 2, 3 (indices 2..m-1), 2, tail, 1.
IntPoly family_three(int m, int tail) {
  std::vector<Int> c(static_cast<std::size_t>(m) + 3, Int(3));
  c[0] = 1;
  c[1] = 2;
  c[static_cast<std::size_t>(m)] = 2;
  c[static_cast<std::size_t>(m) + 1] = tail;
  c[static_cast<std::size_t>(m) + 2] = 1;
  return IntPoly(c);
}

void printed_values(Failures& f) {
  expect_qrat(f, 5, 2, poly({1, 2, 1, 1}), poly({1, 1}));
  expect_qrat(f, 5, 3, poly({1, 1, 2, 1}), poly({1, 1, 1}));
  expect_qrat(f, 7, 3, poly({1, 2, 2, 1, 1}), poly({1, 1, 1}));
  expect_qrat(f, 7, 4, poly({1, 1, 2, 2, 1}), poly({1, 1, 1, 1}));
  expect_qrat(f, 7, 5, poly({1, 1, 2, 2, 1}), poly({1, 1, 2, 1}));
  for (int m = 1; m <= 50; ++m) expect_qrat(f, 2 * m + 1, 2, family_two(m), poly({1, 1}));
  for (int m = 2; m <= 50; ++m) {
    expect_qrat(f, 3 * m + 1, 3, family_three(m, 1), poly({1, 1, 1}));
    expect_qrat(f, 3 * m + 2, 3, family_three(m, 2), poly({1, 1, 1}));
  }
  expect_qrat(f, 25, 11, poly({1, 3, 4, 5, 5, 4, 2, 1}), poly({1, 2, 2, 3, 2, 1}));
  const IntPoly phi3 = poly({1, 1, 1});
  expect_qrat(f, 9, 7, phi3 * poly({1, 0, 1, 1}), poly({1, 1, 2, 2, 1}));
  expect_qrat(f, 15, 7, phi3 * poly({1, 1, 0, 1, 1, 0, 1}), IntPoly::q_integer(7));
  expect_qrat(f, 15, 8, phi3 * poly({1, 0, 1, 1, 0, 1, 1}), poly({1, 1}) * poly({1, 0, 1}) * poly({1, 0, 0, 0, 1}));
}

void deformations_agree(Failures& f) {
  absorb(f, suite("equality"));
  // Independent route: the defining nested fractions at a few points.
  for (const auto& x : rationals_above_one(60)) {
    const QRational q = qdeform(x);
    const auto reg = expand_regular(x);
    const auto neg = expand_negative(x);
    for (int t : {2, 3, -2}) {
      const BigRational v = q.num.evaluate(t) / q.den.evaluate(t);
      expect(f, oracle::regular_fraction(reg.a, t) == v && oracle::negative_fraction(neg.c, t) == v,
             "nested fractions disagree at " + x.to_string() + ", q=" + std::to_string(t));
    }
  }
}

void closure_counts(Failures& f) {
  absorb(f, suite("closures"));
  for (const auto& e : regular_expansions_up_to(12)) {
    const QRational q = qdeform(evaluate_cf(e));
    expect(f, IntPoly(oracle::closure_counts(build_graph(e))) == q.num, "predicate count R " + to_string(e));
    expect(f, IntPoly(oracle::closure_counts(build_graph_prime(e))) == q.den, "predicate count S " + to_string(e));
  }
}

void positivity(Failures& f) { absorb(f, suite("positivity")); }

void matrix_calculus(Failures& f) {
  absorb(f, suite("matrices"));
  for (const auto& x : rationals_above_one(60)) {
    const auto c = expand_negative(x).c;
    if (c.size() > 8) continue;
    const Mat2 mq = matrix_neg(c);
    expect(f, oracle::same(oracle::continuant_neg_det(c), mq.a), "M_q(1,1) vs determinant " + x.to_string());
  }
}

void continuants(Failures& f) { absorb(f, suite("continuants")); }

void quiddity(Failures& f) {
  const auto r = quiddity_classify({3, 3, 1, 2, 4, 3, 1, 2, 4, 1});
  expect(f, r.kind == QuiddityKind::Triangulation && r.sign == -1 && r.exponent == 7, "decagon is -q^7 Id");
  absorb(f, suite("quiddity"));
}

void farey_graph(Failures& f) {
  absorb(f, suite("mediant"));
  const std::map<std::string, std::string> fig{
      {"2/1", "\\frac{1+q}{1}"},
      {"3/2", "\\frac{1+q+q^2}{1+q}"},
      {"3/1", "\\frac{1+q+q^2}{1}"},
      {"4/3", "\\frac{1+q+q^2+q^3}{1+q+q^2}"},
      {"7/5", "\\frac{1+q+2q^2+2q^3+q^4}{1+q+2q^2+q^3}"},
      {"5/3", "\\frac{1+q+2q^2+q^3}{1+q+q^2}"},
      {"5/2", "\\frac{1+2q+q^2+q^3}{1+q}"},
      {"4/1", "\\frac{1+q+q^2+q^3}{1}"},
      {"8/3", "\\frac{1+2q+2q^2+2q^3+q^4}{1+q+q^2}"},
      {"7/2", "\\frac{1+2q+2q^2+q^3+q^4}{1+q}"},
      {"8/5", "\\frac{1+2q+2q^2+2q^3+q^4}{1+2q+q^2+q^3}"},
  };
  std::map<std::string, std::string> seen;
  for (const auto& n : farey_tree(4).nodes) {
    seen[n.node.value.to_string()] =
        "\\frac{" + n.node.label.num.to_string() + "}{" + n.node.label.den.to_string() + "}";
  }
  for (const auto& [x, label] : fig) {
    const auto it = seen.find(x);
    expect(f, it != seen.end() && it->second == label,
           "tree label " + x + ": expected " + label + ", got " + (it == seen.end() ? "(missing)" : it->second));
  }
}

void ptolemy(Failures& f) {
  absorb(f, suite("ptolemy"));
  expect(f, ptolemy_fan(3, 0) == q_int(3) * q_pow(-2), "fan c=3, beta=0");
}

void sequences(Failures& f) {
  absorb(f, suite("sequences"));
  const std::vector<std::vector<int>> fib{{1},           {1, 1},          {1, 1, 1},
                                          {1, 2, 1, 1},  {1, 2, 2, 2, 1}, {1, 3, 3, 3, 2, 1},
                                          {1, 3, 4, 5, 4, 3, 1}, {1, 4, 6, 7, 7, 5, 3, 1},
                                          {1, 4, 7, 10, 11, 10, 7, 4, 1}};
  const std::vector<std::vector<int>> pell{
      {1},
      {1, 1},
      {1, 2, 1, 1},
      {1, 2, 3, 3, 2, 1},
      {1, 3, 5, 6, 6, 5, 2, 1},
      {1, 3, 7, 11, 13, 13, 11, 7, 3, 1},
      {1, 4, 10, 18, 25, 29, 29, 24, 16, 9, 3, 1},
      {1, 4, 12, 25, 41, 56, 65, 65, 56, 41, 25, 12, 4, 1},
      {1, 5, 16, 37, 67, 101, 131, 148, 146, 126, 95, 61, 32, 14, 4, 1},
      {1, 5, 18, 46, 94, 160, 233, 297, 335, 335, 297, 233, 160, 94, 46, 18, 5, 1}};
  auto compare = [&](SequenceKind kind, const std::vector<std::vector<int>>& printed, bool mirror) {
    const auto rows = triangle_rows(kind, static_cast<int>(printed.size()));
    for (std::size_t i = 0; i < printed.size(); ++i) {
      std::vector<Int> want(printed[i].begin(), printed[i].end());
      if (mirror) std::reverse(want.begin(), want.end());
      expect(f, rows[i] == want, to_string(kind) + " row " + std::to_string(i + 1));
    }
  };
  compare(SequenceKind::Fib, fib, false);
  compare(SequenceKind::FibMirror, fib, true);
  compare(SequenceKind::Pell, pell, false);
  const std::vector<int> pell_sums{1, 2, 5, 12, 29, 70, 169, 408, 985, 2378};
  const auto rows = triangle_rows(SequenceKind::Pell, 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    expect(f, std::accumulate(rows[i].begin(), rows[i].end(), Int(0)) == pell_sums[i],
           "Pell row sum " + std::to_string(i + 1));
  }
}

// Terms of sign * t^{lead} * sum_k body[k] t^{-k} in half-exponent units.
std::vector<std::pair<long long, Int>> printed_v(int sign, long long lead_halves, std::initializer_list<int> body) {
  std::vector<std::pair<long long, Int>> out;
  long long k = 0;
  for (int c : body) {
    if (c != 0) out.emplace_back(lead_halves - 2 * k, Int(sign * c));
    ++k;
  }
  return out;
}

void jones(Failures& f) {
  const JonesPoly j154 = jones_polynomial(Rational(15, 4));
  const JonesPoly j83 = jones_polynomial(Rational(8, 3));
  expect_poly(f, j154.j, poly({1, 1, 2, 3, 2, 3, 2, 1}), "J_{15/4}");
  expect_poly(f, j83.j, poly({1, 1, 2, 1, 2, 1}), "J_{8/3}");
  expect(f, to_signed_laurent(j154, 16, -1).terms() == printed_v(-1, 16, {1, -1, 2, -3, 2, -3, 2, -1}),
         "V_{15/4} round trip");
  expect(f, to_signed_laurent(j83, 3, -1).terms() == printed_v(-1, 3, {1, -1, 2, -1, 2, -1}), "V_{8/3} round trip");
  expect(f, to_signed_laurent(j83, 3, -1).to_string() == "-t^3/2+t^1/2-2t^-1/2+t^-3/2-2t^-5/2+t^-7/2",
         "V_{8/3} text");
  expect_poly(f, jones_via_closures(Rational(15, 4)).j, j154.j, "J_{15/4} by closures");
  expect_poly(f, jones_via_closures(Rational(8, 3), ClosureRoute::WeightedGF).j, j83.j, "J_{8/3} by weighted sum");
  absorb(f, suite("jones"));
}

void q_minus_one(Failures& f) {
  absorb(f, suite("qminus1"));
  for (const auto& x : rationals_above_one(100)) {
    const QRational q = qdeform(x);
    Int alt_r = 0, alt_s = 0;
    for (std::size_t i = 0; i < q.num.coeffs().size(); ++i) alt_r += (i % 2 ? -1 : 1) * q.num.coeffs()[i];
    for (std::size_t i = 0; i < q.den.coeffs().size(); ++i) alt_s += (i % 2 ? -1 : 1) * q.den.coeffs()[i];
    expect(f, alt_r >= -1 && alt_r <= 1 && alt_s >= -1 && alt_s <= 1, "values at -1 for " + x.to_string());
    expect(f, (alt_r == 0) == (x.r() % 2 == 0) && (alt_s == 0) == (x.s() % 2 == 0), "zeros at -1 for " + x.to_string());
    if (x.r() % 2 == 0) {
      expect(f, oracle::divide(oracle::from(LaurentPoly(q.num)), oracle::Laurent{0, {1, 1}}).has_value(),
             "(1+q) divides R for " + x.to_string());
    }
  }
}

}  // namespace

int main() {
  bool conjecture_clean = true;
  std::vector<std::string> conjecture_notes;
  const std::vector<Criterion> criteria{
      {"AC1", "printed q-rationals, families, factorizations", 1, printed_values},
      {"AC2", "regular and negative deformations agree, r+s <= 150", 30, deformations_agree},
      {"AC3", "closure counts equal R and S, sum(a) <= 18", 120, closure_counts},
      {"AC4", "total positivity and neighbour monomials, r+s <= 24", 60, positivity},
      {"AC5", "matrix identities and surgery", 60, matrix_calculus},
      {"AC6", "mirror and Euler continuant identities", 60, continuants},
      {"AC7", "quiddity classification", 30, quiddity},
      {"AC8", "weighted Farey tree and reference labels", 10, farey_graph},
      {"AC9", "Ptolemy weights and fan", 30, ptolemy},
      {"AC10", "Fibonacci and Pell polynomials", 10, sequences},
      {"AC11", "Jones polynomials", 60, jones},
      {"AC12", "values at q = -1", 10, q_minus_one},
      {"AC13", "unimodality and divisibility scan, r+s <= 30 (report only)", 60,
       [&](Failures& f) {
         const ConjectureReport rep = conjectures(30);
         for (const auto& s : rep.unimodality_counterexamples) conjecture_notes.push_back("not unimodal: " + s);
         for (const auto& s : rep.divisibility_counterexamples) conjecture_notes.push_back("not divisible: " + s);
         conjecture_clean = conjecture_notes.empty();
         conjecture_notes.push_back("scanned " + std::to_string(rep.scanned) + " rationals, " +
                                    std::to_string(rep.divisibility_witnesses.size()) + " factorizations");
         (void)f;
       },
       false},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "took %.2fs, budget %.0fs", secs, c.budget_seconds);
      f.push_back(buf);
    }
    const bool pass = f.empty() && (c.blocking || conjecture_clean);
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title << "  (" << timing << ")\n";
    for (std::size_t i = 0; i < f.size() && i < 20; ++i) std::cout << "    " << f[i] << "\n";
    if (f.size() > 20) std::cout << "    ... " << f.size() - 20 << " more\n";
    if (!c.blocking)
      for (const auto& n : conjecture_notes) std::cout << "    " << n << "\n";
    if (!f.empty() && c.blocking) ++failed;
  }
  std::cout << (failed == 0 ? "all blocking criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
