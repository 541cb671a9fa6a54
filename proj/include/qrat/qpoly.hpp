#pragma once

// Dense one-variable polynomials and Laurent polynomials in q with
// arbitrary-precision integer coefficients.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qrat/errors.hpp"

namespace qrat {

using Int = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

inline BigRational pow(const BigRational& x, long long e) {
  BigRational base = e < 0 ? BigRational(1) / x : x;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  BigRational result = 1;
  while (n != 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

enum class Style { Text, Latex };

// Renders sum c_i q^{e_i}; terms are (exponent, coefficient) pairs in
// ascending exponent order, zero coefficients already dropped.
inline std::string render_terms(const std::vector<std::pair<long long, Int>>& terms, Style style,
                                const std::string& var = "q") {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Int mag = c < 0 ? Int(-c) : c;
    if (c < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var;
    if (e != 1) {
      if (style == Style::Latex) {
        out << "^{" << e << "}";
      } else {
        out << "^" << e;
      }
    }
  }
  return out.str();
}

}  // namespace detail

/// Polynomial in q with integer coefficients; coeffs()[i] multiplies q^i.
/// The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

  static IntPoly monomial(std::size_t exponent, const Int& c = 1) {
    std::vector<Int> v(exponent + 1);
    v[exponent] = c;
    return IntPoly(std::move(v));
  }

  /// [a]_q = 1 + q + ... + q^{a-1}; [0]_q = 0.
  static IntPoly q_integer(std::size_t a) { return IntPoly(std::vector<Int>(a, Int(1))); }

  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, or -1 for the zero polynomial.
  long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }

  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  Int leading() const { return is_zero() ? Int(0) : coeffs_.back(); }

  /// Multiplication by q^k, k >= 0.
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Int> v(k, Int(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(v));
  }

  /// Coefficient list reversed, i.e. q^{deg} p(1/q) when p(0) != 0.
  IntPoly reversed() const {
    std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(v));
  }

  BigRational evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
  }

  Int sum_of_coefficients() const {
    Int s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
  }

  /// If the polynomial is exactly q^k, returns k.
  std::optional<std::size_t> monomial_exponent() const {
    if (is_zero() || coeffs_.back() != 1) return std::nullopt;
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return std::nullopt;
    }
    return coeffs_.size() - 1;
  }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  IntPoly& operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(v));
  }

  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(detail::Style style = detail::Style::Text) const {
    std::vector<std::pair<long long, Int>> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) terms.emplace_back(static_cast<long long>(i), coeffs_[i]);
    }
    return detail::render_terms(terms, style);
  }
  std::string to_latex() const { return to_string(detail::Style::Latex); }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

/// Thrown by exact_divide when the divisor does not divide the dividend in Z[q].
class NotDivisible : public DomainError {
 public:
  explicit NotDivisible(IntPoly remainder)
      : DomainError("not divisible: remainder " + remainder.to_string()), remainder_(std::move(remainder)) {}
  const IntPoly& remainder() const noexcept { return remainder_; }

 private:
  IntPoly remainder_;
};

/// Quotient of num by den over the integers. Throws NotDivisible carrying the
/// (partial) remainder when the division is not exact.
inline IntPoly exact_divide(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw DomainError("exact_divide: division by the zero polynomial");
  std::vector<Int> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size();
  if (rem.size() < dn) {
    if (rem.empty()) return {};
    throw NotDivisible(num);
  }
  std::vector<Int> quot(rem.size() - dn + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Int& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (top % d.back() != 0) throw NotDivisible(IntPoly(rem));
    Int f = top / d.back();
    quot[k] = f;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= f * d[j];
  }
  IntPoly r(std::move(rem));
  if (!r.is_zero()) throw NotDivisible(std::move(r));
  return IntPoly(std::move(quot));
}

/// True iff the coefficients weakly increase and then weakly decrease.
inline bool unimodal(const IntPoly& p) {
  const auto& c = p.coeffs();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i >= c.size();
}

/// Laurent polynomial q^{min_exp} * body(q), body(0) != 0 unless zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const IntPoly& p) { assign(0, p); }  // NOLINT: lossless promotion
  LaurentPoly(long long min_exp, std::vector<Int> coeffs) { assign(min_exp, IntPoly(std::move(coeffs))); }
  LaurentPoly(long long min_exp, std::initializer_list<Int> coeffs) { assign(min_exp, IntPoly(coeffs)); }

  static LaurentPoly monomial(long long exponent, const Int& c = 1) { return LaurentPoly(exponent, {c}); }
  static LaurentPoly constant(const Int& c) { return LaurentPoly(0, {c}); }

  /// [a]_{q^{-1}} = 1 + q^{-1} + ... + q^{-(a-1)}.
  static LaurentPoly q_integer_inverse(std::size_t a) {
    if (a == 0) return {};
    return LaurentPoly(-static_cast<long long>(a) + 1, std::vector<Int>(a, Int(1)));
  }

  long long min_exp() const noexcept { return min_exp_; }
  const std::vector<Int>& coeffs() const noexcept { return body_.coeffs(); }
  const IntPoly& body() const noexcept { return body_; }
  bool is_zero() const noexcept { return body_.is_zero(); }
  long long max_exp() const noexcept { return min_exp_ + body_.degree(); }

  Int coeff(long long exponent) const {
    if (exponent < min_exp_) return 0;
    return body_.coeff(static_cast<std::size_t>(exponent - min_exp_));
  }

  bool is_polynomial() const noexcept { return is_zero() || min_exp_ >= 0; }

  IntPoly to_int_poly() const {
    if (!is_polynomial()) throw DomainError("Laurent polynomial has negative powers of q: " + to_string());
    return body_.shifted(static_cast<std::size_t>(min_exp_));
  }

  /// Multiplication by q^k.
  LaurentPoly shifted(long long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += k;
    return r;
  }

  /// Substitution q -> q^{-1}.
  LaurentPoly inverted() const {
    if (is_zero()) return {};
    LaurentPoly r;
    r.min_exp_ = -max_exp();
    r.body_ = body_.reversed();
    return r;
  }

  BigRational evaluate(const BigRational& x) const {
    if (is_zero()) return 0;
    if (x == 0 && min_exp_ < 0) throw DomainError("evaluation of negative powers of q at q = 0");
    if (x == 0) return min_exp_ == 0 ? BigRational(body_.coeff(0)) : BigRational(0);
    return body_.evaluate(x) * detail::pow(x, min_exp_);
  }

  /// If the polynomial is c*q^k, returns (c, k).
  std::optional<std::pair<Int, long long>> as_monomial() const {
    if (body_.degree() != 0) return std::nullopt;
    return std::make_pair(body_.coeff(0), min_exp_);
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    r.body_ = -r.body_;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long long lo = std::min(a.min_exp_, b.min_exp_);
    IntPoly s = a.body_.shifted(static_cast<std::size_t>(a.min_exp_ - lo)) +
                b.body_.shifted(static_cast<std::size_t>(b.min_exp_ - lo));
    LaurentPoly r;
    r.assign(lo, s);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.assign(a.min_exp_ + b.min_exp_, a.body_ * b.body_);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.body_ == b.body_ && (a.is_zero() || a.min_exp_ == b.min_exp_);
  }

  std::string to_string(detail::Style style = detail::Style::Text) const {
    std::vector<std::pair<long long, Int>> terms;
    const auto& c = body_.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) terms.emplace_back(min_exp_ + static_cast<long long>(i), c[i]);
    }
    return detail::render_terms(terms, style);
  }
  std::string to_latex() const { return to_string(detail::Style::Latex); }

 private:
  void assign(long long min_exp, const IntPoly& p) {
    const auto& c = p.coeffs();
    std::size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead == c.size()) {
      min_exp_ = 0;
      body_ = IntPoly();
      return;
    }
    min_exp_ = min_exp + static_cast<long long>(lead);
    body_ = IntPoly(std::vector<Int>(c.begin() + static_cast<std::ptrdiff_t>(lead), c.end()));
  }

  long long min_exp_ = 0;
  IntPoly body_;
};

/// Exact division by a monomial c*q^k; throws when some coefficient is not
/// divisible by c.
inline LaurentPoly divide_by_monomial(const LaurentPoly& p, const LaurentPoly& monomial) {
  auto m = monomial.as_monomial();
  if (!m || m->first == 0) throw DomainError("divisor is not a nonzero monomial: " + monomial.to_string());
  std::vector<Int> c = p.coeffs();
  for (auto& x : c) {
    if (x % m->first != 0) throw DomainError("monomial division is not exact");
    x /= m->first;
  }
  return LaurentPoly(p.min_exp() - m->second, std::move(c));
}

}  // namespace qrat
