#pragma once

// Weighted Farey graph on [1, inf], total positivity of q-rationals and the
// matrix surgery / quiddity tests.

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"
#include "qrat/qrational.hpp"

namespace qrat {

/// A vertex of the weighted Farey graph. neg holds the negative expansion,
/// with 1/1 stored as {1} and 1/0 as the empty list.
struct FareyNode {
  Rational value;
  QRational label;
  std::vector<std::int64_t> neg;
};

inline FareyNode farey_infinity() { return {Rational(1, 0), qdeform(Rational(1, 0)), {}}; }
inline FareyNode farey_one() { return {Rational(1, 1), qdeform(Rational(1, 1)), {1}}; }

inline FareyNode farey_node(const Rational& x) {
  if (x.is_infinity()) return farey_infinity();
  if (x.is_one()) return farey_one();
  return {x, qdeform(x), expand_negative(x).c};
}

inline bool farey_neighbors(const Rational& x, const Rational& y) {
  Int d = x.r() * y.s() - x.s() * y.r();
  return d == 1 || d == -1;
}

struct MediantResult {
  FareyNode child;
  std::int64_t ell;
};

/// Weighted Farey sum (R_L + q^l R_R) / (S_L + q^l S_R). The child expansion
/// comes from the parent with the larger r + s: if it is the left parent its
/// last coefficient grows by one, otherwise a 2 is appended. l is the child's
/// last coefficient minus one.
inline MediantResult weighted_mediant(const FareyNode& left, const FareyNode& right) {
  if (!(left.value < right.value)) throw DomainError("weighted_mediant: left parent must be smaller");
  if (!farey_neighbors(left.value, right.value)) {
    throw DomainError("weighted_mediant: " + left.value.to_string() + " and " + right.value.to_string() +
                      " are not Farey neighbours");
  }
  if (left.value.r() < left.value.s()) throw DomainError("weighted_mediant: parents must lie in [1, inf]");
  const bool left_newer = left.value.r() + left.value.s() > right.value.r() + right.value.s();
  std::vector<std::int64_t> neg = left_newer ? left.neg : right.neg;
  if (left_newer) {
    neg.back() += 1;
  } else {
    neg.push_back(2);
  }
  const std::int64_t ell = neg.back() - 1;
  const IntPoly shift = IntPoly::monomial(static_cast<std::size_t>(ell));
  Rational value(left.value.r() + right.value.r(), left.value.s() + right.value.s());
  QRational label{left.label.num + shift * right.label.num, left.label.den + shift * right.label.den, value};
  return {{value, std::move(label), std::move(neg)}, ell};
}

struct FareyEdge {
  Rational u;
  Rational v;
  std::int64_t weight_exponent;
};

struct FareyTreeNode {
  FareyNode node;
  int depth;
  Rational left_parent;
  Rational right_parent;
  std::int64_t ell;
};

struct FareyTree {
  std::vector<FareyTreeNode> nodes;
  std::vector<FareyEdge> edges;
  /// Exponent the triangle rule assigns to the parent edge L-R of each node,
  /// i.e. ell - 1, aligned with nodes.
  std::vector<std::int64_t> parent_edge_exponent;
};

/// Breadth-first weighted Stern-Brocot tree on [1, inf]. Depth 0 is the
/// triangle (1/1, 2/1, 1/0); each child adds edges L-child (weight 1) and
/// child-R (weight q^l).
inline FareyTree farey_tree(int depth) {
  if (depth < 0) throw DomainError("farey_tree: depth must be nonnegative");
  FareyTree tree;
  const FareyNode one = farey_one();
  const FareyNode inf = farey_infinity();
  tree.edges.push_back({one.value, inf.value, 0});

  struct Pending {
    FareyNode left;
    FareyNode right;
    int depth;
  };
  std::deque<Pending> queue{{one, inf, 0}};
  while (!queue.empty()) {
    Pending p = std::move(queue.front());
    queue.pop_front();
    MediantResult m = weighted_mediant(p.left, p.right);
    tree.nodes.push_back({m.child, p.depth, p.left.value, p.right.value, m.ell});
    tree.parent_edge_exponent.push_back(m.ell - 1);
    tree.edges.push_back({p.left.value, m.child.value, 0});
    tree.edges.push_back({m.child.value, p.right.value, m.ell});
    if (p.depth < depth) {
      queue.push_back({p.left, m.child, p.depth + 1});
      queue.push_back({m.child, p.right, p.depth + 1});
    }
  }
  return tree;
}

/// R_x S_y - S_x R_y for x > y.
inline IntPoly positivity_diff(const Rational& x, const Rational& y) {
  if (!(y < x)) throw DomainError("positivity_diff: requires x > y, got " + x.to_string() + ", " + y.to_string());
  const QRational qx = qdeform(x);
  const QRational qy = qdeform(y);
  return qx.num * qy.den - qx.den * qy.num;
}

/// Exponent a with R_x S_y - S_x R_y = q^a for Farey neighbours x > y >= 1.
/// Let c be the negative expansion of whichever of x, y has the larger
/// numerator. If that is x, a = sum(c) - len(c); otherwise
/// a = c_1 + ... + c_{k-1} - k + 1.
inline std::int64_t neighbor_weight(const Rational& x, const Rational& y) {
  if (!(y < x)) throw DomainError("neighbor_weight: requires x > y");
  if (x.r() * y.s() - x.s() * y.r() != 1) {
    throw DomainError("neighbor_weight: " + x.to_string() + " and " + y.to_string() + " are not Farey neighbours");
  }
  if (x.r() < x.s() || y.r() < y.s()) throw DomainError("neighbor_weight: arguments must lie in [1, inf]");
  const bool x_larger = x.r() > y.r();
  const std::vector<std::int64_t> c = farey_node(x_larger ? x : y).neg;
  const auto k = static_cast<std::int64_t>(c.size());
  std::int64_t sum = 0;
  if (x_larger) {
    for (auto v : c) sum += v;
    return sum - k;
  }
  for (std::int64_t i = 0; i + 1 < k; ++i) sum += c[static_cast<std::size_t>(i)];
  return sum - k + 1;
}

/// (..., c_i, c_{i+1}, ...) -> (..., c_i + 1, 1, c_{i+1} + 1, ...), 1 <= i < length.
/// M_q of the result is q times M_q of the input.
inline std::vector<std::int64_t> surgery_insert(const std::vector<std::int64_t>& c, std::size_t i) {
  if (i < 1 || i >= c.size()) throw DomainError("surgery_insert: position must satisfy 1 <= i < length");
  std::vector<std::int64_t> out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i - 1));
  out.push_back(c[i - 1] + 1);
  out.push_back(1);
  out.push_back(c[i] + 1);
  out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(i + 1), c.end());
  return out;
}

/// (..., c_i, ...) -> (..., c', 1, 1, c'', ...) with c' + c'' = c_i + 1.
/// M_q of the result is minus M_q of the input.
inline std::vector<std::int64_t> surgery_break(const std::vector<std::int64_t>& c, std::size_t i,
                                               std::int64_t c_left) {
  if (i < 1 || i > c.size()) throw DomainError("surgery_break: position must satisfy 1 <= i <= length");
  const std::int64_t c_right = c[i - 1] + 1 - c_left;
  if (c_left < 1 || c_right < 1) throw DomainError("surgery_break: split parts must be positive");
  std::vector<std::int64_t> out(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i - 1));
  out.insert(out.end(), {c_left, 1, 1, c_right});
  out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(i), c.end());
  return out;
}

enum class QuiddityKind { Triangulation, ThreeDDissection, Neither };

inline std::string to_string(QuiddityKind k) {
  switch (k) {
    case QuiddityKind::Triangulation:
      return "Triangulation";
    case QuiddityKind::ThreeDDissection:
      return "ThreeDDissection";
    case QuiddityKind::Neither:
      return "Neither";
  }
  return "Neither";
}

struct QuiddityResult {
  QuiddityKind kind;
  Mat2 matrix;
  /// Set when the matrix is +-q^e Id.
  std::optional<int> sign;
  std::optional<long long> exponent;
};

/// Triangulation iff M_q(c) = -q^{n-3} Id, ThreeDDissection iff +q^{n-3} Id,
/// Neither otherwise (including other scalar matrices).
inline QuiddityResult quiddity_classify(const std::vector<std::int64_t>& c) {
  if (c.size() < 3) throw DomainError("quiddity_classify: need at least 3 entries");
  QuiddityResult res{QuiddityKind::Neither, matrix_neg(c), std::nullopt, std::nullopt};
  if (auto sm = res.matrix.scalar_monomial()) {
    res.sign = sm->first;
    res.exponent = sm->second;
    const long long n = static_cast<long long>(c.size());
    if (sm->second == n - 3) res.kind = sm->first == -1 ? QuiddityKind::Triangulation : QuiddityKind::ThreeDDissection;
  }
  return res;
}

}  // namespace qrat
