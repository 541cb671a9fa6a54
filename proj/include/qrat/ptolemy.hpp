#pragma once

// Ptolemy weight systems on triangulated polygons.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"
#include "qrat/qpoly.hpp"
#include "qrat/qrational.hpp"
#include "qrat/triangulation.hpp"

namespace qrat {

/// Symmetric table of chord weights x_{i,j} of a convex n-gon, vertices
/// 0..n-1 in cyclic order.
class PtolemyWeights {
 public:
  explicit PtolemyWeights(int n)
      : n_(n), table_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int n() const noexcept { return n_; }

  bool known(int i, int j) const { return i == j || at(i, j).has_value(); }

  LaurentPoly get(int i, int j) const {
    if (i == j) return {};
    const auto& v = at(i, j);
    if (!v) throw std::logic_error("Ptolemy weight requested before it was computed");
    return *v;
  }

  void set(int i, int j, const LaurentPoly& w) {
    if (i == j) throw DomainError("x_{i,i} is fixed to 0");
    auto& a = at(i, j);
    if (a && !(*a == w)) throw std::logic_error("inconsistent Ptolemy weight");
    a = w;
    at(j, i) = w;
  }

  /// x_ac x_bd = x_ab x_cd + x_ad x_bc for every a < b < c < d.
  bool relations_hold() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        for (int c = b + 1; c < n_; ++c)
          for (int d = c + 1; d < n_; ++d) {
            if (!(get(a, c) * get(b, d) == get(a, b) * get(c, d) + get(a, d) * get(b, c))) return false;
          }
    return true;
  }

 private:
  std::optional<LaurentPoly>& at(int i, int j) {
    return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  const std::optional<LaurentPoly>& at(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }

  int n_;
  std::vector<std::optional<LaurentPoly>> table_;
};

struct WeightedEdge {
  int i;
  int j;
  LaurentPoly weight;
};

namespace detail {

inline int mod(int a, int n) { return ((a % n) + n) % n; }

/// Short chord x_{t-1,t+1} from the fan of triangles at t, one quadrilateral
/// at a time. Every division is by an edge of the triangulation.
inline void solve_fan(PtolemyWeights& w, const std::vector<std::vector<int>>& adj, int t) {
  const int n = w.n();
  std::vector<int> nb = adj[static_cast<std::size_t>(t)];
  std::sort(nb.begin(), nb.end(), [&](int x, int y) { return mod(x - t, n) > mod(y - t, n); });
  const int u0 = nb.front();
  for (std::size_t j = 2; j < nb.size(); ++j) {
    const int uj = nb[j];
    const int up = nb[j - 1];
    LaurentPoly num = w.get(t, uj) * w.get(up, u0) + w.get(t, u0) * w.get(uj, up);
    w.set(u0, uj, divide_by_monomial(num, w.get(t, up)));
  }
}

/// x_{i-1,j+1} as the tridiagonal determinant over the chain i-1, ..., j+1
/// divided by the product of the inner sides.
inline LaurentPoly chain_determinant(const PtolemyWeights& w, int lo, int hi) {
  LaurentPoly prev = LaurentPoly::constant(1);
  LaurentPoly cur = w.get(lo, lo + 2);
  for (int t = lo + 2; t <= hi - 1; ++t) {
    LaurentPoly next = w.get(t - 1, t + 1) * cur - w.get(t, t + 1) * w.get(t - 2, t - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  LaurentPoly sides = LaurentPoly::constant(1);
  for (int t = lo + 1; t <= hi - 2; ++t) sides *= w.get(t, t + 1);
  return divide_by_monomial(cur, sides);
}

}  // namespace detail

/// Completes the weights of a triangulated n-gon. initial must list the n
/// sides and the n-3 diagonals; all of them must be monomials.
inline PtolemyWeights ptolemy_complete(int n, const std::vector<WeightedEdge>& initial) {
  if (n < 3) throw DomainError("ptolemy_complete: polygon needs at least 3 vertices");
  if (static_cast<int>(initial.size()) != 2 * n - 3) throw DomainError("ptolemy_complete: expected 2n-3 edges");
  PtolemyWeights w(n);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : initial) {
    w.set(e.i, e.j, e.weight);
    adj[static_cast<std::size_t>(e.i)].push_back(e.j);
    adj[static_cast<std::size_t>(e.j)].push_back(e.i);
  }
  for (int t = 0; t < n; ++t) detail::solve_fan(w, adj, t);
  for (int len = 3; len < n; ++len) {
    for (int lo = 0; lo + len < n; ++lo) {
      w.set(lo, lo + len, detail::chain_determinant(w, lo, lo + len));
    }
  }
  return w;
}

/// Initial weights on T_{r/s}: the base of the l-th triangle gets q^l when the
/// triangle is base down and q^{-l} when it is base up; everything else 1.
/// With jones_side the side [0, n-1] is set to q^{-1} instead.
inline std::vector<WeightedEdge> ptolemy_initial_weights(const Triangulation& t, bool jones_side = false) {
  std::vector<WeightedEdge> edges;
  std::vector<std::optional<LaurentPoly>> side(static_cast<std::size_t>(t.n));
  for (std::size_t l = 0; l < t.triangles.size(); ++l) {
    const auto& tri = t.triangles[l];
    const auto ell = static_cast<long long>(l);
    int lo = std::min(tri.base[0], tri.base[1]);
    int hi = std::max(tri.base[0], tri.base[1]);
    const int idx = (lo == 0 && hi == t.n - 1) ? t.n - 1 : lo;
    side[static_cast<std::size_t>(idx)] = LaurentPoly::monomial(tri.base_down ? ell : -ell);
  }
  if (jones_side) side[static_cast<std::size_t>(t.n - 1)] = LaurentPoly::monomial(-1);
  for (int i = 0; i < t.n; ++i) {
    LaurentPoly wgt = side[static_cast<std::size_t>(i)].value_or(LaurentPoly::constant(1));
    edges.push_back({i, (i + 1) % t.n, wgt});
  }
  for (const auto& d : t.diagonals) edges.push_back({d[0], d[1], LaurentPoly::constant(1)});
  return edges;
}

struct PtolemyResult {
  LaurentPoly x_0k;  // x_{0,k+1}
  LaurentPoly x_1k;  // x_{1,k+1}
  int n;
  int k;
  PtolemyWeights weights;
};

/// Ptolemy weights of T_{r/s}; q^{n-3} x_{0,k+1} = R and q^{n-3} x_{1,k+1} = S.
inline PtolemyResult ptolemy_solve(const Rational& x, bool jones_side = false) {
  const Triangulation t = triangulation_build(expand_regular(x));
  PtolemyWeights w = ptolemy_complete(t.n, ptolemy_initial_weights(t, jones_side));
  LaurentPoly x0 = w.get(0, t.k + 1);
  LaurentPoly x1 = w.get(1, t.k + 1);
  return {std::move(x0), std::move(x1), t.n, t.k, std::move(w)};
}

/// The (c+2)-gon fan with apex c+1: sides x_{0,c+1} = q^{-b}, x_{0,1} = 1,
/// x_{t,t+1} = q^{b+t} for 1 <= t <= c-2, x_{c-1,c} = 1,
/// x_{c,c+1} = q^{-(b+c-1)}; diagonals from c+1 weigh 1. Returns x_{0,c}.
inline LaurentPoly ptolemy_fan(int c, long long beta) {
  if (c < 2) throw DomainError("ptolemy_fan: c must be at least 2");
  const int n = c + 2;
  std::vector<WeightedEdge> edges;
  edges.push_back({0, c + 1, LaurentPoly::monomial(-beta)});
  edges.push_back({0, 1, LaurentPoly::constant(1)});
  for (int t = 1; t <= c - 2; ++t) edges.push_back({t, t + 1, LaurentPoly::monomial(beta + t)});
  edges.push_back({c - 1, c, LaurentPoly::constant(1)});
  edges.push_back({c, c + 1, LaurentPoly::monomial(-(beta + c - 1))});
  for (int t = 1; t <= c - 1; ++t) edges.push_back({c + 1, t, LaurentPoly::constant(1)});
  return ptolemy_complete(n, edges).get(0, c);
}

}  // namespace qrat
