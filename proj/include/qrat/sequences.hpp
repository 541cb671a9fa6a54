#pragma once

// q-deformed Fibonacci and Pell polynomials.

#include <string>
#include <utility>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"
#include "qrat/qpoly.hpp"
#include "qrat/qrational.hpp"

namespace qrat {

enum class SequenceKind { Fib, FibMirror, Pell, PellMirror };

inline std::string to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::Fib:
      return "fib";
    case SequenceKind::FibMirror:
      return "fib-mirror";
    case SequenceKind::Pell:
      return "pell";
    case SequenceKind::PellMirror:
      return "pell-mirror";
  }
  return "fib";
}

/// F_0, F_1, ..., F_n.
inline std::vector<Int> fibonacci_numbers(int n) {
  std::vector<Int> f{0, 1};
  while (static_cast<int>(f.size()) <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  f.resize(static_cast<std::size_t>(n) + 1);
  return f;
}

/// P_0, P_1, ..., P_n with P_0 = 0, P_1 = 1, P_{i+1} = 2 P_i + P_{i-1}.
inline std::vector<Int> pell_numbers(int n) {
  std::vector<Int> p{0, 1};
  while (static_cast<int>(p.size()) <= n) p.push_back(2 * p[p.size() - 1] + p[p.size() - 2]);
  p.resize(static_cast<std::size_t>(n) + 1);
  return p;
}

/// (F_n, F~_n): F_n is the denominator of [F_{n+1}/F_n]_q and F~_n the
/// numerator of [F_n/F_{n-1}]_q.
inline std::pair<IntPoly, IntPoly> q_fibonacci(int n) {
  if (n < 1) throw DomainError("q_fibonacci: n must be at least 1");
  const auto f = fibonacci_numbers(n + 1);
  const auto i = static_cast<std::size_t>(n);
  IntPoly den = qdeform(Rational(f[i + 1], f[i])).den;
  IntPoly num = qdeform(Rational(f[i], f[i - 1])).num;
  return {std::move(den), std::move(num)};
}

/// (P_n, P~_n): the n-th convergent P_{n+1}/P_n of [2, 2, 2, ...] deforms to
/// P_{n+1}/P~_n, and P_1 = 1.
inline std::pair<IntPoly, IntPoly> q_pell(int n) {
  if (n < 1) throw DomainError("q_pell: n must be at least 1");
  const auto p = pell_numbers(n + 1);
  const auto i = static_cast<std::size_t>(n);
  IntPoly num = n == 1 ? IntPoly::constant(1) : qdeform(Rational(p[i], p[i - 1])).num;
  IntPoly den = qdeform(Rational(p[i + 1], p[i])).den;
  return {std::move(num), std::move(den)};
}

/// Coefficient rows 1..max_row. Fibonacci row i holds F_{i+1} (resp. F~_{i+1});
/// Pell row i holds P_i (resp. P~_i).
inline std::vector<std::vector<Int>> triangle_rows(SequenceKind kind, int max_row) {
  if (max_row < 1) throw DomainError("triangle_rows: max_row must be at least 1");
  std::vector<std::vector<Int>> rows;
  for (int i = 1; i <= max_row; ++i) {
    switch (kind) {
      case SequenceKind::Fib:
        rows.push_back(q_fibonacci(i + 1).first.coeffs());
        break;
      case SequenceKind::FibMirror:
        rows.push_back(q_fibonacci(i + 1).second.coeffs());
        break;
      case SequenceKind::Pell:
        rows.push_back(q_pell(i).first.coeffs());
        break;
      case SequenceKind::PellMirror:
        rows.push_back(q_pell(i).second.coeffs());
        break;
    }
  }
  return rows;
}

/// Regular expansion of the n-th Pell convergent P_{n+1}/P_n.
inline CFRegular pell_convergent_expansion(int n) {
  const auto p = pell_numbers(n + 1);
  return expand_regular(Rational(p[static_cast<std::size_t>(n) + 1], p[static_cast<std::size_t>(n)]));
}

}  // namespace qrat
