#pragma once

// Oriented path graphs attached to r/s and their closures, i.e. vertex sets
// with no edge leaving the set.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"
#include "qrat/qpoly.hpp"

namespace qrat {

/// Left: the edge between vertices e and e+1 points to e. Right: to e+1.
enum class Direction { Left, Right };

struct QuiverPath {
  int vertex_count = 0;
  std::vector<Direction> directions;

  friend bool operator==(const QuiverPath&, const QuiverPath&) = default;

  std::string to_string() const {
    if (vertex_count == 0) return "(empty)";
    std::string s = "o";
    for (auto d : directions) s += (d == Direction::Left ? "<-o" : "->o");
    return s;
  }
};

/// Closures stored as bitmasks, bit v standing for vertex v (0-based).
struct ClosureGF {
  int vertex_count = 0;
  std::vector<std::uint32_t> subsets;
};

struct ClosureEnumeration {
  std::vector<Int> counts;  // counts[i] = number of i-vertex closures
  ClosureGF gf;
};

inline constexpr int kMaxClosureVertices = 30;

namespace detail {

inline void append(std::vector<Direction>& v, std::int64_t count, Direction d) {
  for (std::int64_t i = 0; i < count; ++i) v.push_back(d);
}

inline QuiverPath path_from(std::vector<Direction> dirs) {
  QuiverPath g;
  g.vertex_count = static_cast<int>(dirs.size()) + 1;
  g.directions = std::move(dirs);
  return g;
}

struct EdgeMasks {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
};

inline EdgeMasks edge_masks(const QuiverPath& g) {
  EdgeMasks m;
  for (std::size_t e = 0; e < g.directions.size(); ++e) {
    (g.directions[e] == Direction::Left ? m.left : m.right) |= (std::uint32_t{1} << e);
  }
  return m;
}

inline void require_capacity(const QuiverPath& g) {
  if (g.vertex_count > kMaxClosureVertices) {
    throw CapacityError("closure enumeration is limited to " + std::to_string(kMaxClosureVertices) +
                        " vertices, graph has " + std::to_string(g.vertex_count) + "; use the polynomial route");
  }
}

}  // namespace detail

/// (a_1 - 1) Left, a_2 Right, a_3 Left, ..., (a_2m - 1) Right; sum(a) - 1 vertices.
inline QuiverPath build_graph(const CFRegular& e) {
  validate(e);
  std::vector<Direction> dirs;
  for (std::size_t i = 0; i < e.a.size(); ++i) {
    std::int64_t count = e.a[i];
    if (i == 0) --count;
    if (i + 1 == e.a.size()) --count;
    detail::append(dirs, count, i % 2 == 0 ? Direction::Left : Direction::Right);
  }
  return detail::path_from(std::move(dirs));
}

/// build_graph without its first a_1 vertices; may be empty.
inline QuiverPath build_graph_prime(const CFRegular& e) {
  QuiverPath g = build_graph(e);
  const auto drop = static_cast<std::size_t>(e.a[0]);
  if (drop >= static_cast<std::size_t>(g.vertex_count)) return {};
  g.directions.erase(g.directions.begin(), g.directions.begin() + static_cast<std::ptrdiff_t>(drop));
  g.vertex_count -= static_cast<int>(drop);
  return g;
}

/// a_1 Left, a_2 Right, ..., a_{2m-1} Left, (a_2m - 1) Right; sum(a) vertices.
inline QuiverPath jones_graph(const CFRegular& e) {
  validate(e);
  std::vector<Direction> dirs;
  for (std::size_t i = 0; i < e.a.size(); ++i) {
    std::int64_t count = e.a[i];
    if (i + 1 == e.a.size()) --count;
    detail::append(dirs, count, i % 2 == 0 ? Direction::Left : Direction::Right);
  }
  return detail::path_from(std::move(dirs));
}

inline bool is_closure(const QuiverPath& g, std::uint32_t subset) {
  for (std::size_t e = 0; e < g.directions.size(); ++e) {
    const bool lo = (subset >> e) & 1U;
    const bool hi = (subset >> (e + 1)) & 1U;
    if (g.directions[e] == Direction::Left ? (hi && !lo) : (lo && !hi)) return false;
  }
  return true;
}

/// Scans all 2^n vertex subsets.
inline ClosureEnumeration enumerate_closures(const QuiverPath& g) {
  detail::require_capacity(g);
  const auto [lmask, rmask] = detail::edge_masks(g);
  ClosureEnumeration out;
  out.gf.vertex_count = g.vertex_count;
  out.counts.assign(static_cast<std::size_t>(g.vertex_count) + 1, Int(0));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.vertex_count) + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << g.vertex_count;
  for (std::uint64_t s = 0; s < limit; ++s) {
    const auto c = static_cast<std::uint32_t>(s);
    const std::uint32_t shifted = c >> 1;
    if ((shifted & ~c & lmask) != 0 || (c & ~shifted & rmask) != 0) continue;
    ++counts[static_cast<std::size_t>(std::popcount(c))];
    out.gf.subsets.push_back(c);
  }
  for (std::size_t i = 0; i < counts.size(); ++i) out.counts[i] = counts[i];
  return out;
}

inline IntPoly closure_polynomial(const QuiverPath& g) { return IntPoly(enumerate_closures(g).counts); }

/// Sum over closures C of q^{sum of weights[v], v in C}.
inline IntPoly specialize_gf(const ClosureGF& gf, const std::vector<std::int64_t>& weights) {
  if (static_cast<int>(weights.size()) != gf.vertex_count) {
    throw DomainError("specialize_gf: expected " + std::to_string(gf.vertex_count) + " weights, got " +
                      std::to_string(weights.size()));
  }
  std::vector<Int> coeffs;
  for (std::uint32_t c : gf.subsets) {
    std::int64_t e = 0;
    for (int v = 0; v < gf.vertex_count; ++v) {
      if ((c >> v) & 1U) e += weights[static_cast<std::size_t>(v)];
    }
    if (e < 0) throw DomainError("specialize_gf: weights must be nonnegative");
    if (static_cast<std::size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(e) + 1);
    coeffs[static_cast<std::size_t>(e)] += 1;
  }
  return IntPoly(std::move(coeffs));
}

/// Closures of g in which vertices 0 and 1 are both present or both absent,
/// counted by size.
inline IntPoly jones_closure_count(const QuiverPath& g) {
  if (g.vertex_count < 2) throw DomainError("jones_closure_count: graph needs at least two vertices");
  const ClosureEnumeration all = enumerate_closures(g);
  std::vector<Int> coeffs(static_cast<std::size_t>(g.vertex_count) + 1, Int(0));
  for (std::uint32_t c : all.gf.subsets) {
    if (((c ^ (c >> 1)) & 1U) != 0) continue;
    coeffs[static_cast<std::size_t>(std::popcount(c))] += 1;
  }
  return IntPoly(std::move(coeffs));
}

/// Closures as sorted lists of 1-based vertex indices.
inline std::vector<std::vector<int>> closure_sets(const ClosureGF& gf) {
  std::vector<std::vector<int>> out;
  out.reserve(gf.subsets.size());
  for (std::uint32_t c : gf.subsets) {
    std::vector<int> s;
    for (int v = 0; v < gf.vertex_count; ++v) {
      if ((c >> v) & 1U) s.push_back(v + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qrat
