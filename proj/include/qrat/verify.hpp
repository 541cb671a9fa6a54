#pragma once

// Exhaustive and seeded-random verification sweeps over the identities the
// library relies on, plus the non-failing conjecture scans.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qrat/closures.hpp"
#include "qrat/contfrac.hpp"
#include "qrat/farey.hpp"
#include "qrat/jones.hpp"
#include "qrat/ptolemy.hpp"
#include "qrat/qpoly.hpp"
#include "qrat/qrational.hpp"
#include "qrat/sequences.hpp"
#include "qrat/triangulation.hpp"

namespace qrat {

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  std::map<std::string, std::int64_t> bounds;
  std::int64_t cases = 0;
  std::vector<VerifyFailure> failures;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  int max_sum = 0;    // 0 picks the suite's default
  int max_a_sum = 0;  // closures suite
  int depth = 0;      // mediant suite
  int random_cases = 0;
  std::uint64_t seed = 42;
};

/// Coprime r > s >= 1 with r + s <= max_sum, ordered by r + s then s.
inline std::vector<Rational> rationals_above_one(int max_sum) {
  std::vector<Rational> out;
  for (int n = 3; n <= max_sum; ++n) {
    for (int s = 1; 2 * s < n; ++s) {
      const int r = n - s;
      if (boost::multiprecision::gcd(Int(r), Int(s)) == 1) out.emplace_back(Int(r), Int(s));
    }
  }
  return out;
}

/// Every even-length composition [a_1, ..., a_2m] with a_1 + ... + a_2m <= max_a_sum.
inline std::vector<CFRegular> regular_expansions_up_to(int max_a_sum) {
  std::vector<CFRegular> out;
  std::vector<std::int64_t> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (!cur.empty() && cur.size() % 2 == 0) out.push_back({cur});
    for (int v = 1; v <= remaining; ++v) {
      cur.push_back(v);
      rec(remaining - v);
      cur.pop_back();
    }
  };
  rec(max_a_sum);
  return out;
}

namespace detail {

class SuiteRun {
 public:
  explicit SuiteRun(std::string name) : start_(std::chrono::steady_clock::now()) { report_.suite = std::move(name); }

  void bound(const std::string& key, std::int64_t v) { report_.bounds[key] = v; }

  void check(bool ok, const std::string& input, const std::string& expected, const std::string& actual) {
    ++report_.cases;
    if (!ok) report_.failures.push_back({input, expected, actual});
  }

  template <class A, class B>
  void equal(const A& expected, const B& actual, const std::string& input) {
    ++report_.cases;
    if (!(expected == actual)) report_.failures.push_back({input, expected.to_string(), actual.to_string()});
  }

  VerifyReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerifyReport report_;
  std::chrono::steady_clock::time_point start_;
};

inline int pick(int v, int fallback) { return v > 0 ? v : fallback; }

inline std::string seq_string(const std::vector<std::int64_t>& c) { return "(" + join(c) + ")"; }

inline std::vector<std::int64_t> random_sequence(std::mt19937_64& rng, int lo, int hi, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> val(lo, hi);
  std::vector<std::int64_t> c(static_cast<std::size_t>(len(rng)));
  for (auto& v : c) v = val(rng);
  return c;
}

inline std::vector<std::int64_t> slice(const std::vector<std::int64_t>& c, std::size_t from, std::size_t to) {
  if (from >= to) return {};
  return {c.begin() + static_cast<std::ptrdiff_t>(from), c.begin() + static_cast<std::ptrdiff_t>(to)};
}

}  // namespace detail

inline VerifyReport verify_equality(const VerifyOptions& o) {
  detail::SuiteRun run("equality");
  const int max_sum = detail::pick(o.max_sum, 150);
  run.bound("max_sum", max_sum);
  for (const auto& x : rationals_above_one(max_sum)) {
    const CFRegular reg = expand_regular(x);
    const CFNegative neg = expand_negative(x);
    const std::string in = x.to_string();
    run.check(evaluate_cf(reg) == x, in, x.to_string(), evaluate_cf(reg).to_string());
    run.check(evaluate_cf(neg) == x, in, x.to_string(), evaluate_cf(neg).to_string());
    run.check(reg_to_neg(reg) == neg, in, to_string(neg), to_string(reg_to_neg(reg)));
    run.check(neg_to_reg(neg) == reg, in, to_string(reg), to_string(neg_to_reg(neg)));
    std::int64_t sa = 0, sc = 0;
    for (auto v : reg.a) sa += v;
    for (auto v : neg.c) sc += v;
    run.check(sa + 2 == sc - static_cast<std::int64_t>(neg.c.size()) + 3, in, "sum(a)+2 = sum(c)-k+3", "mismatch");
    run.equal(qdeform_neg(neg), qdeform_reg(reg), in);
  }
  return run.finish();
}

inline VerifyReport verify_degrees(const VerifyOptions& o) {
  detail::SuiteRun run("degrees");
  const int max_sum = detail::pick(o.max_sum, 150);
  run.bound("max_sum", max_sum);
  for (const auto& x : rationals_above_one(max_sum)) {
    const CFRegular reg = expand_regular(x);
    const CFNegative neg = expand_negative(x);
    const QRational q = qdeform(x);
    const DegreeFacts d = expected_degrees(reg);
    const std::string in = x.to_string();
    run.check(q.num.degree() == d.deg_num, in, std::to_string(d.deg_num), std::to_string(q.num.degree()));
    run.check(q.den.degree() == d.deg_den, in, std::to_string(d.deg_den), std::to_string(q.den.degree()));
    std::int64_t sc = 0;
    for (auto v : neg.c) sc += v;
    run.check(q.num.degree() == sc - static_cast<std::int64_t>(neg.c.size()), in, "deg R = sum(c) - k", "mismatch");
    run.check(q.num.coeff(0) == 1 && q.num.leading() == 1 && q.den.coeff(0) == 1 && q.den.leading() == 1, in,
              "constant and leading coefficients 1", q.to_string());
    run.check(q.num.has_nonnegative_coefficients() && q.den.has_nonnegative_coefficients(), in,
              "positive coefficients", q.to_string());
    run.check(q.num.sum_of_coefficients() == x.r() && q.den.sum_of_coefficients() == x.s(), in, "R(1)=r, S(1)=s",
              q.to_string());
    // R S' - S R' is a signed monomial, where R'/S' is the previous convergent.
    IntPoly r_prev = IntPoly::constant(1);
    IntPoly s_prev;
    if (neg.c.size() > 1) {
      const QRational p = qdeform_neg(CFNegative{detail::slice(neg.c, 0, neg.c.size() - 1)});
      r_prev = p.num;
      s_prev = p.den;
    }
    const LaurentPoly w = q.num * s_prev - q.den * r_prev;
    const auto m = w.as_monomial();
    run.check(m && (m->first == 1 || m->first == -1), in, "+-q^e", w.to_string());
  }
  return run.finish();
}

inline VerifyReport verify_qminus1(const VerifyOptions& o) {
  detail::SuiteRun run("qminus1");
  const int max_sum = detail::pick(o.max_sum, 100);
  run.bound("max_sum", max_sum);
  const IntPoly one_plus_q{1, 1};
  for (const auto& x : rationals_above_one(max_sum)) {
    const QRational q = qdeform(x);
    const BigRational rv = q.num.evaluate(-1);
    const BigRational sv = q.den.evaluate(-1);
    const std::string in = x.to_string();
    run.check(rv == -1 || rv == 0 || rv == 1, in, "R(-1) in {-1,0,1}", rv.str());
    run.check(sv == -1 || sv == 0 || sv == 1, in, "S(-1) in {-1,0,1}", sv.str());
    run.check((rv == 0) == (x.r() % 2 == 0), in, "R(-1)=0 iff r even", rv.str());
    run.check((sv == 0) == (x.s() % 2 == 0), in, "S(-1)=0 iff s even", sv.str());
    if (x.r() % 2 == 0) {
      bool divides = true;
      try {
        divides = (exact_divide(q.num, one_plus_q) * one_plus_q == q.num);
      } catch (const NotDivisible&) {
        divides = false;
      }
      run.check(divides, in, "(1+q) | R", q.num.to_string());
    }
  }
  return run.finish();
}

/// Rationals >= 1 with r + s <= max_sum, together with 1/0.
inline std::vector<Rational> positivity_domain(int max_sum) {
  std::vector<Rational> out{Rational(1, 0), Rational(1, 1)};
  for (const auto& x : rationals_above_one(max_sum)) out.push_back(x);
  return out;
}

inline VerifyReport verify_positivity(const VerifyOptions& o) {
  detail::SuiteRun run("positivity");
  const int max_sum = detail::pick(o.max_sum, 24);
  run.bound("max_sum", max_sum);
  const auto domain = positivity_domain(max_sum);
  for (const auto& x : domain) {
    for (const auto& y : domain) {
      if (!(y < x)) continue;
      const IntPoly d = positivity_diff(x, y);
      const std::string in = x.to_string() + " > " + y.to_string();
      run.check(d.has_nonnegative_coefficients(), in, "nonnegative coefficients", d.to_string());
      const Int det = x.r() * y.s() - x.s() * y.r();
      run.check(d.sum_of_coefficients() == det, in, det.str(), d.sum_of_coefficients().str());
      const auto mono = d.monomial_exponent();
      run.check(mono.has_value() == (det == 1), in, det == 1 ? "monomial" : "not a monomial", d.to_string());
      if (det == 1 && mono) {
        const auto alpha = neighbor_weight(x, y);
        run.check(static_cast<std::int64_t>(*mono) == alpha, in, "q^" + std::to_string(alpha), d.to_string());
      }
    }
  }
  return run.finish();
}

inline VerifyReport verify_mediant(const VerifyOptions& o) {
  detail::SuiteRun run("mediant");
  const int depth = detail::pick(o.depth, 8);
  run.bound("depth", depth);
  const FareyTree tree = farey_tree(depth);
  std::map<std::pair<std::string, std::string>, std::int64_t> weight;
  for (const auto& e : tree.edges) weight[{e.u.to_string(), e.v.to_string()}] = e.weight_exponent;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    const std::string in = n.node.value.to_string();
    run.equal(qdeform(n.node.value), n.node.label, in);
    run.check(evaluate_cf(CFNegative{n.node.neg}) == n.node.value, in, "expansion evaluates to the node",
              detail::seq_string(n.node.neg));
    const auto it = weight.find({n.left_parent.to_string(), n.right_parent.to_string()});
    run.check(it != weight.end() && it->second == tree.parent_edge_exponent[i], in,
              "parent edge weight q^" + std::to_string(tree.parent_edge_exponent[i]),
              it == weight.end() ? "missing edge" : "q^" + std::to_string(it->second));
  }
  return run.finish();
}

inline VerifyReport verify_closures(const VerifyOptions& o) {
  detail::SuiteRun run("closures");
  const int max_a_sum = detail::pick(o.max_a_sum, 18);
  run.bound("max_a_sum", max_a_sum);
  for (const auto& e : regular_expansions_up_to(max_a_sum)) {
    const QRational q = qdeform_reg(e);
    const std::string in = to_string(e);
    const QuiverPath g = build_graph(e);
    const QuiverPath gp = build_graph_prime(e);
    const ClosureEnumeration all = enumerate_closures(g);
    const IntPoly rp(all.counts);
    run.equal(q.num, rp, in + " G");
    run.equal(q.den, closure_polynomial(gp), in + " G'");
    run.equal(rp, specialize_gf(all.gf, std::vector<std::int64_t>(static_cast<std::size_t>(g.vertex_count), 1)),
              in + " all-ones");
    run.check(Int(all.gf.subsets.size()) == q.value.r(), in, q.value.r().str(), std::to_string(all.gf.subsets.size()));
  }
  return run.finish();
}

inline VerifyReport verify_matrices(const VerifyOptions& o) {
  detail::SuiteRun run("matrices");
  const int max_sum = detail::pick(o.max_sum, 60);
  const int random_cases = detail::pick(o.random_cases, 500);
  run.bound("max_sum", max_sum);
  run.bound("random_cases", random_cases);
  run.bound("seed", static_cast<std::int64_t>(o.seed));
  const Mat2 r_gen = generators(Generator::R, 1);
  const Mat2 s_gen = generators(Generator::S, 1);
  for (const auto& x : rationals_above_one(max_sum)) {
    const CFRegular reg = expand_regular(x);
    const CFNegative neg = expand_negative(x);
    const auto& c = neg.c;
    const auto& a = reg.a;
    const std::size_t k = c.size();
    const std::string in = x.to_string();
    const QRational q = qdeform(x);
    const Mat2 mneg = matrix_neg(neg);
    const Mat2 mreg = matrix_reg(reg);
    const Mat2 mtil = matrix_reg_normalized(reg);

    // Convergent columns.
    IntPoly r_prev = IntPoly::constant(1), s_prev;
    if (k > 1) {
      const QRational p = qdeform_neg(CFNegative{detail::slice(c, 0, k - 1)});
      r_prev = p.num;
      s_prev = p.den;
    }
    const LaurentPoly back = -q_pow(c[k - 1] - 1);
    run.equal(Mat2{q.num, back * r_prev, q.den, back * s_prev}, mneg, in + " M_q columns");
    {
      CFRegular head{detail::slice(a, 0, a.size() - 1)};
      // [a_1, ..., a_{2m-1}] has odd length; evaluate it through the matrix of
      // the even expansion obtained by splitting its last entry.
      std::vector<std::int64_t> h = head.a;
      if (h.back() > 1) {
        h.back() -= 1;
        h.push_back(1);
      } else {
        h.pop_back();
        if (!h.empty()) h.back() += 1;
      }
      if (h.size() >= 2 && h.front() >= 1 && !(h.size() == 2 && h[0] == 0)) {
        const QRational conv = qdeform(evaluate_cf(CFRegular{h}));
        run.check(mtil.a == q_pow(1) * LaurentPoly(q.num) && mtil.c == q_pow(1) * LaurentPoly(q.den), in,
                  "first column (qR, qS)", mtil.to_string());
        run.check(mtil.b == LaurentPoly(conv.num) && mtil.d == LaurentPoly(conv.den), in,
                  "second column " + conv.to_string(), mtil.to_string());
      } else {
        run.check(mtil.a == q_pow(1) * LaurentPoly(q.num) && mtil.c == q_pow(1) * LaurentPoly(q.den), in,
                  "first column (qR, qS)", mtil.to_string());
      }
    }

    // Words in the generators.
    Mat2 word_reg = Mat2::identity();
    for (std::size_t i = 0; i < a.size(); ++i) word_reg *= generators(i % 2 == 0 ? Generator::R : Generator::L, a[i]);
    run.equal(mreg, word_reg, in + " R^a1 L^a2 ...");
    Mat2 word_neg = Mat2::identity();
    for (auto ci : c) word_neg *= generators(Generator::R, ci) * s_gen;
    run.equal(mneg, word_neg, in + " R^c1 S ...");
    run.equal(mtil, mneg * r_gen, in + " normalized M+ = M_q R_q");

    // Continuant entries.
    const auto kk = continuant_neg(c);
    const auto k_head = continuant_neg(detail::slice(c, 0, k - 1));
    const auto k_tail = continuant_neg(detail::slice(c, 1, k));
    const LaurentPoly k_mid = k == 1 ? LaurentPoly{} : continuant_neg(detail::slice(c, 1, k - 1));
    run.equal(Mat2{kk, back * k_head, k_tail, back * k_mid}, mneg, in + " M_q continuants");
    const std::int64_t a_last = a.back();
    const auto kp = continuant_reg(a);
    const auto kp_tail = continuant_reg(detail::slice(a, 1, a.size()), false);
    const auto kp_head = continuant_reg(detail::slice(a, 0, a.size() - 1));
    const auto kp_mid = continuant_reg(detail::slice(a, 1, a.size() - 1), false);
    const LaurentPoly scale = q_pow(-a_last);
    run.equal(Mat2{kp, scale * kp_head, kp_tail, scale * kp_mid}, mreg, in + " M+ continuants");
    const LaurentPoly norm = q_pow(even_sum(reg) - 1);
    run.equal(LaurentPoly(q.num), kk, in + " R = K_k(c)");
    run.equal(LaurentPoly(q.den), k_tail, in + " S = K_{k-1}(c_2..)");
    run.equal(LaurentPoly(q.num), norm * kp, in + " R = q^(E-1) K+");
    run.equal(LaurentPoly(q.den), norm * kp_tail, in + " S = q^(E-1) K+");

    std::int64_t sc = 0;
    for (auto v : c) sc += v;
    run.equal(q_pow(sc - static_cast<std::int64_t>(k)), mneg.det(), in + " det");
  }

  std::mt19937_64 rng(o.seed);
  for (int t = 0; t < random_cases; ++t) {
    const auto c = detail::random_sequence(rng, 1, 6, 8);
    const Mat2 m = matrix_neg(c);
    const std::string in = detail::seq_string(c);
    if (c.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pos(1, c.size() - 1);
      const auto ins = surgery_insert(c, pos(rng));
      run.equal(q_pow(1) * m, matrix_neg(ins), in + " insert");
    }
    std::uniform_int_distribution<std::size_t> pos_b(1, c.size());
    const std::size_t i = pos_b(rng);
    std::uniform_int_distribution<std::int64_t> split(1, c[i - 1]);
    const auto br = surgery_break(c, i, split(rng));
    run.equal(-m, matrix_neg(br), in + " break");
    std::int64_t sc = 0;
    for (auto v : c) sc += v;
    run.equal(q_pow(sc - static_cast<std::int64_t>(c.size())), m.det(), in + " det");
  }
  return run.finish();
}

inline VerifyReport verify_quiddity(const VerifyOptions& o) {
  detail::SuiteRun run("quiddity");
  const int max_sum = detail::pick(o.max_sum, 60);
  const int random_cases = detail::pick(o.random_cases, 200);
  run.bound("max_sum", max_sum);
  run.bound("random_cases", random_cases);
  run.bound("seed", static_cast<std::int64_t>(o.seed));
  auto expect_triangulation = [&](const std::vector<std::int64_t>& q, const std::string& in) {
    const QuiddityResult res = quiddity_classify(q);
    const long long n = static_cast<long long>(q.size());
    run.check(res.kind == QuiddityKind::Triangulation && res.sign == -1 && res.exponent == n - 3, in,
              "-q^" + std::to_string(n - 3) + " Id", res.matrix.to_string());
  };
  expect_triangulation({3, 3, 1, 2, 4, 3, 1, 2, 4, 1}, "decagon (3,3,1,2,4,3,1,2,4,1)");
  for (const auto& x : rationals_above_one(max_sum)) {
    const CFRegular reg = expand_regular(x);
    const Triangulation t = triangulation_build(reg);
    const auto q = t.quiddity();
    const std::string in = x.to_string();
    expect_triangulation(q, in + " " + detail::seq_string(q));
    run.check(t.vertex_labels[static_cast<std::size_t>(t.k + 1)] == x, in, x.to_string(),
              t.vertex_labels[static_cast<std::size_t>(t.k + 1)].to_string());
    run.check(detail::slice(q, 0, static_cast<std::size_t>(t.k)) == expand_negative(x).c, in,
              "quiddity starts with the negative expansion", detail::seq_string(q));
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> size(3, 12);
  for (int i = 0; i < random_cases; ++i) {
    const auto q = random_triangulation_quiddity(size(rng), rng);
    expect_triangulation(q, "random " + detail::seq_string(q));
  }
  return run.finish();
}

/// K^q_{i,j} = K_{j-i-1}(c_{i+1}, ..., c_{j-1}) with K_{i,i} = 0, 1-based c.
inline LaurentPoly euler_k(const std::vector<std::int64_t>& c, int i, int j) {
  if (i == j) return {};
  return continuant_neg(detail::slice(c, static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)));
}

inline VerifyReport verify_continuants(const VerifyOptions& o) {
  detail::SuiteRun run("continuants");
  const int random_cases = detail::pick(o.random_cases, 500);
  run.bound("random_cases", random_cases);
  run.bound("seed", static_cast<std::int64_t>(o.seed));
  std::mt19937_64 rng(o.seed);
  for (int t = 0; t < random_cases; ++t) {
    const auto c = detail::random_sequence(rng, 2, 6, 10);
    const std::string in = detail::seq_string(c);
    std::int64_t sc = 0;
    for (auto v : c) sc += v;
    const std::vector<std::int64_t> rev(c.rbegin(), c.rend());
    run.equal(continuant_neg(c), q_pow(sc - static_cast<std::int64_t>(c.size())) * continuant_neg(rev, Variable::QInverse),
              in + " mirror");
    const int n = static_cast<int>(c.size());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            std::int64_t e = -(k - j);
            for (int h = j; h <= k - 1; ++h) e += c[static_cast<std::size_t>(h - 1)];
            const LaurentPoly lhs = euler_k(c, i, k) * euler_k(c, j, l);
            const LaurentPoly rhs = q_pow(e) * euler_k(c, i, j) * euler_k(c, k, l) + euler_k(c, j, k) * euler_k(c, i, l);
            run.equal(lhs, rhs,
                      in + " (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
                          std::to_string(l) + ")");
          }
  }
  return run.finish();
}

inline VerifyReport verify_ptolemy(const VerifyOptions& o) {
  detail::SuiteRun run("ptolemy");
  const int max_sum = detail::pick(o.max_sum, 20);
  run.bound("max_sum", max_sum);
  for (const auto& x : rationals_above_one(max_sum)) {
    const PtolemyResult p = ptolemy_solve(x);
    const QRational q = qdeform(x);
    const std::string in = x.to_string();
    run.equal(LaurentPoly(q.num), p.x_0k.shifted(p.n - 3), in + " q^(n-3) x_{0,k+1}");
    run.equal(LaurentPoly(q.den), p.x_1k.shifted(p.n - 3), in + " q^(n-3) x_{1,k+1}");
    run.check(p.weights.relations_hold(), in, "Ptolemy relations on all quadruples", "violated");
  }
  for (int c = 2; c <= 8; ++c) {
    for (long long beta = -2; beta <= 3; ++beta) {
      run.equal(q_int(c) * q_pow(-(beta + c - 1)), ptolemy_fan(c, beta),
                "fan c=" + std::to_string(c) + " beta=" + std::to_string(beta));
    }
  }
  return run.finish();
}

inline VerifyReport verify_sequences(const VerifyOptions& o) {
  detail::SuiteRun run("sequences");
  const int n_fib = detail::pick(o.max_sum, 20);
  run.bound("n", n_fib);
  const auto fnum = fibonacci_numbers(n_fib + 2);
  std::vector<IntPoly> f(static_cast<std::size_t>(n_fib) + 2), ft(static_cast<std::size_t>(n_fib) + 2);
  for (int n = 1; n <= n_fib + 1; ++n) std::tie(f[static_cast<std::size_t>(n)], ft[static_cast<std::size_t>(n)]) = q_fibonacci(n);
  for (int n = 1; n <= n_fib; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const QRational q = qdeform(Rational(fnum[i + 1], fnum[i]));
    run.check(q.num == ft[i + 1] && q.den == f[i], "F" + std::to_string(n), q.to_string(),
              ft[i + 1].to_string() + " / " + f[i].to_string());
    run.check(f[i].reversed() == ft[i], "F" + std::to_string(n) + " mirror", f[i].reversed().to_string(),
              ft[i].to_string());
    run.check(f[i].sum_of_coefficients() == fnum[i], "F" + std::to_string(n) + "(1)", fnum[i].str(),
              f[i].sum_of_coefficients().str());
  }
  const IntPoly q1 = IntPoly::monomial(1), q2 = IntPoly::monomial(2);
  for (int l = 1; 2 * l + 2 <= n_fib + 1; ++l) {
    const auto L = static_cast<std::size_t>(l);
    run.equal(q1 * f[2 * L] + f[2 * L - 1], f[2 * L + 1], "F_{2l+1} l=" + std::to_string(l));
    run.equal(f[2 * L + 1] + q2 * f[2 * L], f[2 * L + 2], "F_{2l+2} l=" + std::to_string(l));
    if (l >= 2) run.equal(ft[2 * L] + q2 * ft[2 * L - 1], ft[2 * L + 1], "F~_{2l+1} l=" + std::to_string(l));
    run.equal(q1 * ft[2 * L + 1] + ft[2 * L], ft[2 * L + 2], "F~_{2l+2} l=" + std::to_string(l));
  }

  const int n_pell = 15;
  const auto pnum = pell_numbers(n_pell + 2);
  std::vector<IntPoly> p(static_cast<std::size_t>(n_pell) + 2), pt(static_cast<std::size_t>(n_pell) + 2);
  for (int n = 1; n <= n_pell + 1; ++n) std::tie(p[static_cast<std::size_t>(n)], pt[static_cast<std::size_t>(n)]) = q_pell(n);
  for (int n = 1; n <= n_pell; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const QRational q = qdeform(Rational(pnum[i + 1], pnum[i]));
    run.check(q.num == p[i + 1] && q.den == pt[i], "P" + std::to_string(n), q.to_string(),
              p[i + 1].to_string() + " / " + pt[i].to_string());
    run.check(p[i].reversed() == pt[i], "P" + std::to_string(n) + " mirror", p[i].reversed().to_string(),
              pt[i].to_string());
    run.check(p[i].sum_of_coefficients() == pnum[i], "P" + std::to_string(n) + "(1)", pnum[i].str(),
              p[i].sum_of_coefficients().str());
  }
  const IntPoly one_q{1, 1}, q_q2{0, 1, 1}, q4 = IntPoly::monomial(4);
  for (int l = 1; 2 * l + 2 <= n_pell + 1; ++l) {
    const auto L = static_cast<std::size_t>(l);
    if (l >= 2) run.equal(one_q * p[2 * L] + q4 * p[2 * L - 1], p[2 * L + 1], "P_{2l+1} l=" + std::to_string(l));
    run.equal(q_q2 * p[2 * L + 1] + p[2 * L], p[2 * L + 2], "P_{2l+2} l=" + std::to_string(l));
    run.equal(q_q2 * pt[2 * L] + pt[2 * L - 1], pt[2 * L + 1], "P~_{2l+1} l=" + std::to_string(l));
    run.equal(one_q * pt[2 * L + 1] + q4 * pt[2 * L], pt[2 * L + 2], "P~_{2l+2} l=" + std::to_string(l));
  }
  for (int n = 2; n <= 8; ++n) {
    const QuiverPath g = build_graph(pell_convergent_expansion(n - 1));
    const ClosureEnumeration all = enumerate_closures(g);
    run.check(Int(all.gf.subsets.size()) == pnum[static_cast<std::size_t>(n)], "Pell closures n=" + std::to_string(n),
              pnum[static_cast<std::size_t>(n)].str(), std::to_string(all.gf.subsets.size()));
    run.equal(p[static_cast<std::size_t>(n)], IntPoly(all.counts), "Pell closure polynomial n=" + std::to_string(n));
  }
  return run.finish();
}

inline VerifyReport verify_jones(const VerifyOptions& o) {
  detail::SuiteRun run("jones");
  const int max_sum = detail::pick(o.max_sum, 20);
  run.bound("max_sum", max_sum);
  for (const auto& x : rationals_above_one(max_sum)) {
    const std::string in = x.to_string();
    const IntPoly j = jones_polynomial(x).j;
    run.equal(j, jones_via_continuant(x).j, in + " negative continuant");
    run.equal(j, jones_via_regular_continuant(x).j, in + " regular continuant");
    run.equal(j, jones_via_closures(x, ClosureRoute::ConstrainedCount).j, in + " constrained closures");
    run.equal(j, jones_via_closures(x, ClosureRoute::WeightedGF).j, in + " weighted closure sum");
    run.equal(j, jones_via_ptolemy(x).j, in + " Ptolemy");
    run.check(j.sum_of_coefficients() == x.r(), in, "J(1) = " + x.r().str(), j.sum_of_coefficients().str());
    std::int64_t sa = 0;
    for (auto v : expand_regular(x).a) sa += v;
    run.check(j.degree() == sa, in, "deg J = " + std::to_string(sa), std::to_string(j.degree()));
    run.check(j.coeff(0) == 1 && j.has_nonnegative_coefficients(), in, "constant term 1, nonnegative coefficients",
              j.to_string());
  }
  return run.finish();
}

inline const std::vector<std::pair<std::string, std::function<VerifyReport(const VerifyOptions&)>>>& verify_suites() {
  static const std::vector<std::pair<std::string, std::function<VerifyReport(const VerifyOptions&)>>> suites{
      {"equality", verify_equality},     {"degrees", verify_degrees},       {"qminus1", verify_qminus1},
      {"positivity", verify_positivity}, {"mediant", verify_mediant},       {"closures", verify_closures},
      {"matrices", verify_matrices},     {"quiddity", verify_quiddity},     {"continuants", verify_continuants},
      {"ptolemy", verify_ptolemy},       {"sequences", verify_sequences},   {"jones", verify_jones},
  };
  return suites;
}

struct ConjectureReport {
  int max_sum = 0;
  std::int64_t scanned = 0;
  std::vector<std::string> unimodality_counterexamples;
  std::vector<std::string> divisibility_counterexamples;
  std::vector<std::string> divisibility_witnesses;
};

/// Unimodality of R and S, and (1+q+q^2) | R whenever 3 | r. Reports only.
inline ConjectureReport conjectures(int max_sum) {
  ConjectureReport rep;
  rep.max_sum = max_sum;
  const IntPoly phi3{1, 1, 1};
  for (const auto& x : rationals_above_one(max_sum)) {
    ++rep.scanned;
    const QRational q = qdeform(x);
    if (!unimodal(q.num) || !unimodal(q.den)) rep.unimodality_counterexamples.push_back(x.to_string() + " " + q.to_string());
    if (x.r() % 3 == 0) {
      try {
        const IntPoly cof = exact_divide(q.num, phi3);
        rep.divisibility_witnesses.push_back(x.to_string() + ": R = (1+q+q^2)(" + cof.to_string() + ")");
      } catch (const NotDivisible&) {
        rep.divisibility_counterexamples.push_back(x.to_string() + " " + q.num.to_string());
      }
    }
  }
  return rep;
}

}  // namespace qrat
