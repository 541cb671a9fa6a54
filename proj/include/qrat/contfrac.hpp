#pragma once

// Rationals and their regular / negative continued-fraction expansions.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qrat/errors.hpp"
#include "qrat/qpoly.hpp"

namespace qrat {

/// Nonnegative rational r/s kept in lowest terms. 1/0 is allowed as the
/// point at infinity.
class Rational {
 public:
  Rational() : r_(0), s_(1) {}
  Rational(Int r, Int s) : r_(std::move(r)), s_(std::move(s)) {
    if (r_ < 0 || s_ < 0) throw DomainError("negative rationals are not supported");
    if (r_ == 0 && s_ == 0) throw DomainError("0/0 is not a rational");
    Int g = boost::multiprecision::gcd(r_, s_);
    if (g > 1) {
      r_ /= g;
      s_ /= g;
      reduced_ = true;
    }
  }

  const Int& r() const noexcept { return r_; }
  const Int& s() const noexcept { return s_; }

  /// True when the constructor divided out a common factor.
  bool was_reduced() const noexcept { return reduced_; }

  bool is_infinity() const { return s_ == 0; }
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1 && s_ == 1; }
  bool is_boundary() const { return is_infinity() || is_zero() || is_one(); }

  /// True for r/s > 1 with s >= 1, the range of the expansions.
  bool above_one() const { return s_ >= 1 && r_ > s_; }

  std::string to_string() const { return r_.str() + "/" + s_.str(); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.r_ == b.r_ && a.s_ == b.s_; }

  /// Order on [0, inf]; 1/0 compares above everything else.
  friend bool operator<(const Rational& a, const Rational& b) { return a.r_ * b.s_ < b.r_ * a.s_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

 private:
  Int r_;
  Int s_;
  bool reduced_ = false;
};

/// Regular expansion [a_1, ..., a_2m], every a_i >= 1.
struct CFRegular {
  std::vector<std::int64_t> a;
  friend bool operator==(const CFRegular&, const CFRegular&) = default;
};

/// Negative expansion [[c_1, ..., c_k]], every c_i >= 2.
struct CFNegative {
  std::vector<std::int64_t> c;
  friend bool operator==(const CFNegative&, const CFNegative&) = default;
};

namespace detail {

inline std::int64_t to_small(const Int& v) {
  if (v > Int(INT64_MAX)) throw CapacityError("continued-fraction coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

inline void require_above_one(const Rational& x) {
  if (!x.above_one()) {
    throw DomainError("expansion requires r/s > 1, got " + x.to_string() + "; see farey for boundary values");
  }
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const CFRegular& e) { return "[" + detail::join(e.a) + "]"; }
inline std::string to_string(const CFNegative& e) { return "[[" + detail::join(e.c) + "]]"; }

inline void validate(const CFRegular& e) {
  if (e.a.empty() || e.a.size() % 2 != 0) throw DomainError("regular expansion must have even positive length");
  for (auto v : e.a) {
    if (v < 1) throw DomainError("regular expansion coefficients must be >= 1");
  }
}

inline void validate(const CFNegative& e) {
  if (e.c.empty()) throw DomainError("negative expansion must be nonempty");
  for (auto v : e.c) {
    if (v < 2) throw DomainError("negative expansion coefficients must be >= 2");
  }
}

/// Euclid's algorithm, then an odd-length result [.., a_k] becomes [.., a_k - 1, 1].
inline CFRegular expand_regular(const Rational& x) {
  detail::require_above_one(x);
  CFRegular out;
  Int r = x.r();
  Int s = x.s();
  while (s != 0) {
    out.a.push_back(detail::to_small(r / s));
    Int t = r % s;
    r = s;
    s = t;
  }
  if (out.a.size() % 2 == 1) {
    out.a.back() -= 1;
    out.a.push_back(1);
  }
  return out;
}

/// Ceiling-Euclid: c = ceil(r/s), continue with s / (c*s - r).
inline CFNegative expand_negative(const Rational& x) {
  detail::require_above_one(x);
  CFNegative out;
  Int r = x.r();
  Int s = x.s();
  while (s != 0) {
    Int c = (r + s - 1) / s;
    out.c.push_back(detail::to_small(c));
    Int t = c * s - r;
    r = s;
    s = t;
  }
  return out;
}

/// (a_1+1, 2^{a_2-1}, a_3+2, 2^{a_4-1}, ..., a_{2m-1}+2, 2^{a_2m-1}).
inline CFNegative reg_to_neg(const CFRegular& e) {
  validate(e);
  CFNegative out;
  for (std::size_t i = 0; i < e.a.size(); i += 2) {
    out.c.push_back(e.a[i] + (i == 0 ? 1 : 2));
    for (std::int64_t j = 0; j + 1 < e.a[i + 1]; ++j) out.c.push_back(2);
  }
  return out;
}

inline CFRegular neg_to_reg(const CFNegative& e) {
  validate(e);
  CFRegular out;
  std::size_t i = 0;
  while (i < e.c.size()) {
    out.a.push_back(e.c[i] - (i == 0 ? 1 : 2));
    ++i;
    std::int64_t twos = 0;
    while (i < e.c.size() && e.c[i] == 2) {
      ++twos;
      ++i;
    }
    out.a.push_back(twos + 1);
  }
  return out;
}

inline Rational evaluate_cf(const CFRegular& e) {
  validate(e);
  Int num = 1;
  Int den = 0;
  for (auto it = e.a.rbegin(); it != e.a.rend(); ++it) {
    Int t = Int(*it) * num + den;
    den = num;
    num = t;
  }
  return Rational(num, den);
}

inline Rational evaluate_cf(const CFNegative& e) {
  validate(e);
  Int num = 1;
  Int den = 0;
  for (auto it = e.c.rbegin(); it != e.c.rend(); ++it) {
    Int t = Int(*it) * num - den;
    den = num;
    num = t;
  }
  return Rational(num, den);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Int parse_natural(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("expected a nonnegative integer");
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw ParseError("invalid integer '" + std::string(s) + "'");
  }
  return Int(std::string(s));
}

inline std::vector<std::int64_t> parse_list(std::string_view s) {
  std::vector<std::int64_t> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string_view item = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(to_small(parse_natural(item)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses "r/s" or a bare integer "r".
inline Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_natural(text), Int(1));
  Int r = detail::parse_natural(text.substr(0, slash));
  Int s = detail::parse_natural(text.substr(slash + 1));
  if (r == 0 && s == 0) throw ParseError("0/0 is not a rational");
  return Rational(r, s);
}

/// Parses a comma-separated list of positive integers, e.g. "3,3,1,2".
inline std::vector<std::int64_t> parse_int_list(std::string_view text) { return detail::parse_list(text); }

/// Parses "[a_1,...]" as regular or "[[c_1,...]]" as negative. Exactly one of
/// the outputs is filled; returns true for negative.
inline bool parse_cf(std::string_view text, CFRegular& reg, CFNegative& neg) {
  text = detail::trim(text);
  if (text.size() >= 4 && text.substr(0, 2) == "[[" && text.substr(text.size() - 2) == "]]") {
    neg.c = detail::parse_list(text.substr(2, text.size() - 4));
    validate(neg);
    return true;
  }
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    reg.a = detail::parse_list(text.substr(1, text.size() - 2));
    validate(reg);
    return false;
  }
  throw ParseError("expected [a1,...] or [[c1,...]], got '" + std::string(text) + "'");
}

}  // namespace qrat
