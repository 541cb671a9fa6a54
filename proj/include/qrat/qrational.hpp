#pragma once

// q-deformed rationals [r/s]_q = R(q)/S(q): the convergent recurrence, the
// matrices of convergents, the q-deformed generators and the q-continuants.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"
#include "qrat/qpoly.hpp"

namespace qrat {

struct QRational {
  IntPoly num;
  IntPoly den;
  Rational value;

  friend bool operator==(const QRational& a, const QRational& b) { return a.num == b.num && a.den == b.den; }

  std::string to_string() const { return "(" + num.to_string() + ")/(" + den.to_string() + ")"; }
  std::string to_latex() const { return "\\frac{" + num.to_latex() + "}{" + den.to_latex() + "}"; }
};

/// [a]_q for any integer a: 1 + ... + q^{a-1} when a >= 0 and
/// -(q^{-1} + ... + q^{a}) when a < 0.
inline LaurentPoly q_int(std::int64_t a) {
  if (a >= 0) return IntPoly::q_integer(static_cast<std::size_t>(a));
  return -LaurentPoly(a, std::vector<Int>(static_cast<std::size_t>(-a), Int(1)));
}

inline LaurentPoly q_pow(std::int64_t e) { return LaurentPoly::monomial(e); }

/// 2x2 matrix over Z[q, 1/q], row-major.
struct Mat2 {
  LaurentPoly a, b, c, d;

  static Mat2 identity() { return {LaurentPoly::constant(1), {}, {}, LaurentPoly::constant(1)}; }

  static Mat2 scalar(const LaurentPoly& s) { return {s, {}, {}, s}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  Mat2& operator*=(const Mat2& o) { return *this = *this * o; }

  friend Mat2 operator*(const LaurentPoly& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  LaurentPoly det() const { return a * d - b * c; }

  /// If the matrix is s * Id for a monomial s = sign * q^e, returns (sign, e).
  std::optional<std::pair<int, long long>> scalar_monomial() const {
    if (!b.is_zero() || !c.is_zero() || !(a == d)) return std::nullopt;
    auto m = a.as_monomial();
    if (!m || (m->first != 1 && m->first != -1)) return std::nullopt;
    return std::make_pair(m->first == 1 ? 1 : -1, m->second);
  }

  std::array<BigRational, 4> evaluate(const BigRational& q0) const {
    return {a.evaluate(q0), b.evaluate(q0), c.evaluate(q0), d.evaluate(q0)};
  }

  std::string to_string() const {
    return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
  }
};

/// Elementary factor [[ [c]_q, -q^{c-1} ], [1, 0]].
inline Mat2 neg_factor(std::int64_t c) {
  return {q_int(c), -q_pow(c - 1), LaurentPoly::constant(1), {}};
}

/// M_q(c_1, ..., c_k). Coefficients c_i >= 1 are accepted.
inline Mat2 matrix_neg(const std::vector<std::int64_t>& c) {
  Mat2 m = Mat2::identity();
  for (auto ci : c) {
    if (ci < 1) throw DomainError("matrix_neg: coefficients must be positive");
    m *= neg_factor(ci);
  }
  return m;
}

inline Mat2 matrix_neg(const CFNegative& e) {
  validate(e);
  return matrix_neg(e.c);
}

/// M^+_q(a_1, ..., a_2m).
inline Mat2 matrix_reg(const CFRegular& e) {
  validate(e);
  Mat2 m = Mat2::identity();
  for (std::size_t i = 0; i < e.a.size(); ++i) {
    const std::int64_t a = e.a[i];
    if (i % 2 == 0) {
      m *= Mat2{q_int(a), q_pow(a), LaurentPoly::constant(1), {}};
    } else {
      m *= Mat2{q_int(a).inverted(), q_pow(-a), LaurentPoly::constant(1), {}};
    }
  }
  return m;
}

inline std::int64_t even_sum(const CFRegular& e) {
  std::int64_t s = 0;
  for (std::size_t i = 1; i < e.a.size(); i += 2) s += e.a[i];
  return s;
}

/// q^{a_2 + a_4 + ... + a_2m} M^+_q(a).
inline Mat2 matrix_reg_normalized(const CFRegular& e) { return q_pow(even_sum(e)) * matrix_reg(e); }

enum class Generator { R, L, S };

/// R_q^a, L_q^a or S_q^a for any integer a.
inline Mat2 generators(Generator kind, std::int64_t power) {
  const LaurentPoly one = LaurentPoly::constant(1);
  switch (kind) {
    case Generator::R:
      return {q_pow(power), q_int(power), {}, one};
    case Generator::L:
      return {one, {}, q_int(power).inverted(), q_pow(-power)};
    case Generator::S: {
      const Mat2 s{{}, -q_pow(-1), one, {}};
      const Mat2 s_inv{{}, one, -q_pow(1), {}};
      Mat2 m = Mat2::identity();
      for (std::int64_t i = 0; i < (power < 0 ? -power : power); ++i) m *= (power < 0 ? s_inv : s);
      return m;
    }
  }
  throw DomainError("unknown generator");
}

/// Convergent recurrence over the negative expansion.
inline QRational qdeform_neg(const CFNegative& e) {
  validate(e);
  const auto& c = e.c;
  IntPoly r_prev = IntPoly::constant(1);
  IntPoly r_cur = IntPoly::q_integer(static_cast<std::size_t>(c[0]));
  IntPoly s_prev;
  IntPoly s_cur = IntPoly::constant(1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    const IntPoly qi = IntPoly::q_integer(static_cast<std::size_t>(c[i]));
    const IntPoly back = IntPoly::monomial(static_cast<std::size_t>(c[i - 1] - 1));
    IntPoly r_next = qi * r_cur - back * r_prev;
    IntPoly s_next = qi * s_cur - back * s_prev;
    r_prev = std::move(r_cur);
    r_cur = std::move(r_next);
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
  }
  return {r_cur, s_cur, evaluate_cf(e)};
}

/// Reads R and S off the first column of the normalized regular matrix,
/// which equals (qR, qS).
inline QRational qdeform_reg(const CFRegular& e) {
  const Mat2 m = matrix_reg_normalized(e);
  const LaurentPoly q_inv = q_pow(-1);
  return {(m.a * q_inv).to_int_poly(), (m.c * q_inv).to_int_poly(), evaluate_cf(e)};
}

/// Canonical q-deformation. Boundary values map to 1/0, 0/1 and 1/1.
inline QRational qdeform(const Rational& x) {
  const IntPoly one = IntPoly::constant(1);
  if (x.is_infinity()) return {one, {}, x};
  if (x.is_zero()) return {{}, one, x};
  if (x.is_one()) return {one, one, x};
  if (!x.above_one()) {
    throw DomainError("qdeform of " + x.to_string() + " requires r/s >= 1; see farey");
  }
  return qdeform_neg(expand_negative(x));
}

enum class Variable { Q, QInverse };

/// K_k(c_1, ..., c_k) by the three-term recurrence; K_0 = 1. Accepts c_i >= 1.
inline LaurentPoly continuant_neg(const std::vector<std::int64_t>& c, Variable var = Variable::Q) {
  LaurentPoly prev;
  LaurentPoly cur = LaurentPoly::constant(1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1) throw DomainError("continuant_neg: coefficients must be positive");
    LaurentPoly next = q_int(c[i]) * cur;
    if (i > 0) next -= q_pow(c[i - 1] - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return var == Variable::Q ? cur : cur.inverted();
}

/// K^+ of a_{first}, ..., where first_odd says whether the first entry sits in
/// an odd position of the ambient sequence. Odd positions use [a]_q and q^a,
/// even positions [a]_{1/q} and q^{-a}.
inline LaurentPoly continuant_reg(const std::vector<std::int64_t>& a, bool first_odd = true,
                                  Variable var = Variable::Q) {
  LaurentPoly prev;
  LaurentPoly cur = LaurentPoly::constant(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) throw DomainError("continuant_reg: coefficients must be positive");
    const bool odd = ((i % 2 == 0) == first_odd);
    LaurentPoly diag = odd ? q_int(a[i]) : q_int(a[i]).inverted();
    LaurentPoly next = diag * cur;
    if (i > 0) {
      const bool prev_odd = !odd;
      next += q_pow(prev_odd ? a[i - 1] : -a[i - 1]) * prev;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return var == Variable::Q ? cur : cur.inverted();
}

/// Degree and coefficient facts that every [r/s]_q with r/s > 1 satisfies.
struct DegreeFacts {
  long long deg_num;
  long long deg_den;
};

/// deg R = a_1 + ... + a_2m - 1 and deg S = a_2 + ... + a_2m - 1.
inline DegreeFacts expected_degrees(const CFRegular& e) {
  long long total = 0;
  for (auto v : e.a) total += v;
  return {total - 1, total - e.a[0] - 1};
}

}  // namespace qrat
