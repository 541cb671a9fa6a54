#pragma once

// Normalized Jones polynomials J_{r/s}(q) of rational knots C(r/s).

#include <string>
#include <utility>
#include <vector>

#include "qrat/closures.hpp"
#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"
#include "qrat/ptolemy.hpp"
#include "qrat/qpoly.hpp"
#include "qrat/qrational.hpp"

namespace qrat {

struct JonesPoly {
  IntPoly j;
  Rational knot_fraction;

  friend bool operator==(const JonesPoly& a, const JonesPoly& b) { return a.j == b.j; }
};

namespace detail {

inline void require_knot_fraction(const Rational& x) {
  if (!x.above_one()) throw DomainError("Jones polynomial requires r/s > 1, got " + x.to_string());
}

}  // namespace detail

/// R - qS where R/S = [(r+s)/s]_q.
inline JonesPoly jones_polynomial(const Rational& x) {
  detail::require_knot_fraction(x);
  const QRational shifted = qdeform(Rational(x.r() + x.s(), x.s()));
  return {shifted.num - shifted.den.shifted(1), x};
}

/// K_k(c_1 + 1, c_2, ..., c_k) - q K_{k-1}(c_2, ..., c_k) over the negative
/// expansion of r/s.
inline JonesPoly jones_via_continuant(const Rational& x) {
  detail::require_knot_fraction(x);
  std::vector<std::int64_t> c = expand_negative(x).c;
  std::vector<std::int64_t> tail(c.begin() + 1, c.end());
  c[0] += 1;
  LaurentPoly j = continuant_neg(c) - continuant_neg(tail).shifted(1);
  return {j.to_int_poly(), x};
}

/// q^{a_2 + a_4 + ... + a_2m - 1} (K^+(a_1 + 1, a_2, ..., a_2m) - q K^+(a_2, ..., a_2m))
/// over the regular expansion of r/s.
inline JonesPoly jones_via_regular_continuant(const Rational& x) {
  detail::require_knot_fraction(x);
  CFRegular e = expand_regular(x);
  std::vector<std::int64_t> tail(e.a.begin() + 1, e.a.end());
  const std::int64_t norm = even_sum(e) - 1;
  e.a[0] += 1;
  LaurentPoly j = continuant_reg(e.a) - continuant_reg(tail, false).shifted(1);
  return {j.shifted(norm).to_int_poly(), x};
}

enum class ClosureRoute { ConstrainedCount, WeightedGF };

/// Either counts closures of jones_graph keeping vertices 1 and 2 together,
/// or specializes the closure sum of G_{r/s} at weights (2, 1, ..., 1).
inline JonesPoly jones_via_closures(const Rational& x, ClosureRoute route = ClosureRoute::ConstrainedCount) {
  detail::require_knot_fraction(x);
  const CFRegular e = expand_regular(x);
  if (route == ClosureRoute::ConstrainedCount) return {jones_closure_count(jones_graph(e)), x};
  const QuiverPath g = build_graph(e);
  const ClosureEnumeration all = enumerate_closures(g);
  std::vector<std::int64_t> weights(static_cast<std::size_t>(g.vertex_count), 1);
  weights[0] = 2;
  return {specialize_gf(all.gf, weights), x};
}

/// q^{n-2} x_{0,k+1} on T_{r/s} with the side [0, n-1] weighted q^{-1}.
inline JonesPoly jones_via_ptolemy(const Rational& x) {
  detail::require_knot_fraction(x);
  const PtolemyResult p = ptolemy_solve(x, true);
  return {p.x_0k.shifted(p.n - 2).to_int_poly(), x};
}

/// sign * t^{p_halves / 2} * body(t) with body = J(-1/t).
struct SignedLaurent {
  int sign = 1;
  long long p_halves = 0;
  LaurentPoly body;

  /// (exponent in units of t^{1/2}, coefficient), descending.
  std::vector<std::pair<long long, Int>> terms() const {
    std::vector<std::pair<long long, Int>> out;
    const auto& c = body.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      out.emplace_back(p_halves + 2 * (body.min_exp() + static_cast<long long>(i)), sign * c[i]);
    }
    return out;
  }

  std::string to_string() const {
    const auto ts = terms();
    if (ts.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [h, c] : ts) {
      Int mag = c < 0 ? Int(-c) : c;
      s += c < 0 ? "-" : (first ? "" : "+");
      first = false;
      if (h == 0) {
        s += mag.str();
        continue;
      }
      if (mag != 1) s += mag.str();
      s += "t";
      if (h != 2) s += "^" + (h % 2 == 0 ? std::to_string(h / 2) : std::to_string(h) + "/2");
    }
    return s;
  }
};

/// V(t) = sign * t^{p} * J(-1/t), p = p_halves / 2.
inline SignedLaurent to_signed_laurent(const JonesPoly& j, long long p_halves, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("to_signed_laurent: sign must be +1 or -1");
  LaurentPoly body;
  const auto& c = j.j.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const long long e = static_cast<long long>(i);
    body += LaurentPoly::monomial(-e, (i % 2 == 0) ? c[i] : Int(-c[i]));
  }
  return {sign, p_halves, body};
}

}  // namespace qrat
