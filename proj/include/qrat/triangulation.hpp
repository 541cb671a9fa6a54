#pragma once

// The snake triangulation T_{r/s} of an n-gon and random triangulations.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"

namespace qrat {

struct Triangle {
  std::array<int, 3> vertices;
  bool base_down;
  /// The side shared with neither neighbour in the snake direction: the
  /// bottom side for base-down triangles, the top side otherwise.
  std::array<int, 2> base;
};

/// Vertices are numbered 0..n-1 in cyclic order: top vertices 1..k+1 left to
/// right, then the bottom ones right to left, ending with n-1 next to 0.
struct Triangulation {
  int n = 0;
  int k = 0;
  std::vector<Rational> vertex_labels;  // indexed by vertex number
  std::vector<Triangle> triangles;      // left to right
  std::vector<std::array<int, 2>> diagonals;

  /// Triangle counts at vertices 1, 2, ..., n-1, 0.
  std::vector<std::int64_t> quiddity() const {
    std::vector<std::int64_t> count(static_cast<std::size_t>(n), 0);
    for (const auto& t : triangles) {
      for (int v : t.vertices) ++count[static_cast<std::size_t>(v)];
    }
    std::vector<std::int64_t> out(count.begin() + 1, count.end());
    out.push_back(count[0]);
    return out;
  }
};

/// a_1 base-down triangles, then a_2 base-up, and so on. Each triangle adds a
/// vertex labelled with the Farey sum of the current diagonal's endpoints,
/// starting from the side (1/0 top, 0/1 bottom).
inline Triangulation triangulation_build(const CFRegular& e) {
  validate(e);
  std::int64_t total = 0;
  std::int64_t k = 0;
  for (std::size_t i = 0; i < e.a.size(); ++i) {
    total += e.a[i];
    if (i % 2 == 1) k += e.a[i];
  }
  Triangulation t;
  t.n = static_cast<int>(total + 2);
  t.k = static_cast<int>(k);
  t.vertex_labels.assign(static_cast<std::size_t>(t.n), Rational());

  int top = 1;
  int bottom = 0;
  int next_top = 2;
  int next_bottom = t.n - 1;
  t.vertex_labels[1] = Rational(1, 0);
  t.vertex_labels[0] = Rational(0, 1);

  for (std::size_t i = 0; i < e.a.size(); ++i) {
    const bool down = (i % 2 == 0);
    for (std::int64_t j = 0; j < e.a[i]; ++j) {
      const Rational& lt = t.vertex_labels[static_cast<std::size_t>(top)];
      const Rational& lb = t.vertex_labels[static_cast<std::size_t>(bottom)];
      Rational mediant(lt.r() + lb.r(), lt.s() + lb.s());
      if (down) {
        const int v = next_bottom--;
        t.vertex_labels[static_cast<std::size_t>(v)] = mediant;
        t.triangles.push_back({{top, bottom, v}, true, {bottom, v}});
        bottom = v;
      } else {
        const int v = next_top++;
        t.vertex_labels[static_cast<std::size_t>(v)] = mediant;
        t.triangles.push_back({{top, bottom, v}, false, {top, v}});
        top = v;
      }
      t.diagonals.push_back({top, bottom});
    }
  }
  // The last pair is a side of the polygon, not a diagonal.
  t.diagonals.pop_back();
  return t;
}

/// Quiddity of a random triangulation of an n-gon grown from a triangle by
/// gluing ears onto randomly chosen sides.
template <class Rng>
std::vector<std::int64_t> random_triangulation_quiddity(int n, Rng& rng) {
  if (n < 3) throw DomainError("random_triangulation_quiddity: n must be at least 3");
  std::vector<std::int64_t> q{1, 1, 1};
  while (static_cast<int>(q.size()) < n) {
    std::uniform_int_distribution<std::size_t> pick(0, q.size() - 1);
    const std::size_t i = pick(rng);
    const std::size_t j = (i + 1) % q.size();
    ++q[i];
    ++q[j];
    q.insert(q.begin() + static_cast<std::ptrdiff_t>(i + 1), 1);
  }
  return q;
}

}  // namespace qrat
