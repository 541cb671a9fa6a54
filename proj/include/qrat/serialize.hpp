#pragma once

// JSON forms of the library values. Big integers travel as decimal strings.

#include <json.hpp>

#include <string>
#include <vector>

#include "qrat/closures.hpp"
#include "qrat/contfrac.hpp"
#include "qrat/errors.hpp"
#include "qrat/farey.hpp"
#include "qrat/jones.hpp"
#include "qrat/qpoly.hpp"
#include "qrat/qrational.hpp"
#include "qrat/verify.hpp"

namespace qrat {

using Json = nlohmann::json;

namespace detail {

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (!j.is_string()) throw ParseError("expected a decimal string");
  const std::string s = j.get<std::string>();
  const bool neg = !s.empty() && s[0] == '-';
  Int v = parse_natural(neg ? std::string_view(s).substr(1) : std::string_view(s));
  return neg ? Int(-v) : v;
}

inline Json strings(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

}  // namespace detail

inline Json to_json(const LaurentPoly& p) { return {{"min_exp", p.min_exp()}, {"coeffs", detail::strings(p.coeffs())}}; }

inline Json to_json(const IntPoly& p) { return {{"min_exp", 0}, {"coeffs", detail::strings(p.coeffs())}}; }

inline LaurentPoly laurent_from_json(const Json& j) {
  try {
    std::vector<Int> c;
    for (const auto& e : j.at("coeffs")) c.push_back(detail::int_from_json(e));
    return LaurentPoly(j.value("min_exp", 0LL), std::move(c));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

inline IntPoly poly_from_json(const Json& j) { return laurent_from_json(j).to_int_poly(); }

inline Json to_json(const Rational& x) { return {{"r", x.r().str()}, {"s", x.s().str()}}; }

inline Json to_json(const QRational& q, bool reduced = false) {
  Json j{{"r", q.value.r().str()}, {"s", q.value.s().str()}, {"num", to_json(q.num)}, {"den", to_json(q.den)}};
  if (reduced) j["reduced"] = true;
  return j;
}

inline QRational qrational_from_json(const Json& j) {
  try {
    return {poly_from_json(j.at("num")), poly_from_json(j.at("den")),
            Rational(detail::int_from_json(j.at("r")), detail::int_from_json(j.at("s")))};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed q-rational JSON: ") + e.what());
  }
}

inline Json to_json(const CFRegular& e) { return {{"kind", "regular"}, {"coeffs", e.a}}; }
inline Json to_json(const CFNegative& e) { return {{"kind", "negative"}, {"coeffs", e.c}}; }

/// Returns true and fills neg for a negative expansion, false and fills reg otherwise.
inline bool cf_from_json(const Json& j, CFRegular& reg, CFNegative& neg) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    auto coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
    if (kind == "regular") {
      reg = {std::move(coeffs)};
      validate(reg);
      return false;
    }
    if (kind == "negative") {
      neg = {std::move(coeffs)};
      validate(neg);
      return true;
    }
    throw ParseError("unknown continued fraction kind: " + kind);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed continued fraction JSON: ") + e.what());
  }
}

inline Json to_json(const Mat2& m) { return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})}); }

inline Json to_json(const FareyTree& t) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    Json o{{"value", n.node.value.to_string()},
           {"num", to_json(n.node.label.num)},
           {"den", to_json(n.node.label.den)},
           {"depth", n.depth},
           {"parent_edge_weight_exponent", nullptr}};
    if (n.depth > 0) o["parent_edge_weight_exponent"] = t.parent_edge_exponent[i];
    nodes.push_back(std::move(o));
  }
  Json edges = Json::array();
  for (const auto& e : t.edges) {
    edges.push_back({{"u", e.u.to_string()}, {"v", e.v.to_string()}, {"weight_exponent", e.weight_exponent}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

inline Json to_json(const QuiddityResult& r) {
  Json j{{"kind", to_string(r.kind)}, {"matrix", to_json(r.matrix)}};
  j["sign"] = r.sign ? Json(*r.sign) : Json(nullptr);
  j["exponent"] = r.exponent ? Json(*r.exponent) : Json(nullptr);
  return j;
}

inline Json to_json(const JonesPoly& j) {
  return {{"r", j.knot_fraction.r().str()}, {"s", j.knot_fraction.s().str()}, {"j", to_json(j.j)}};
}

inline Json to_json(const QuiverPath& g) {
  Json dirs = Json::array();
  for (auto d : g.directions) dirs.push_back(d == Direction::Left ? "left" : "right");
  return {{"vertices", g.vertex_count}, {"directions", dirs}};
}

inline Json to_json(const VerifyReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", r.suite},   {"bounds", r.bounds},     {"cases", r.cases},
          {"passed", r.passed()}, {"failures", failures}, {"seconds", r.seconds}};
}

inline Json to_json(const ConjectureReport& r) {
  return {{"max_sum", r.max_sum},
          {"scanned", r.scanned},
          {"unimodality_counterexamples", r.unimodality_counterexamples},
          {"divisibility_counterexamples", r.divisibility_counterexamples},
          {"divisibility_witnesses", r.divisibility_witnesses}};
}

}  // namespace qrat
