#pragma once

// The qrat command-line front end. run_cli returns the process exit code:
// 0 success, 1 domain or capacity error (or failed verification), 2 usage.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qrat/qrat.hpp"

namespace qrat::cli {

enum class Format { Text, Json, Latex };

struct Io {
  std::ostream& out;
  std::ostream& err;
  Format format;
};

inline void emit_json(const Io& io, const Json& j) { io.out << j.dump() << "\n"; }

inline std::string poly_text(const LaurentPoly& p, Format f) { return f == Format::Latex ? p.to_latex() : p.to_string(); }

inline std::string matrix_text(const Mat2& m, Format f) {
  if (f == Format::Latex) {
    return "\\begin{pmatrix}" + m.a.to_latex() + " & " + m.b.to_latex() + " \\\\ " + m.c.to_latex() + " & " +
           m.d.to_latex() + "\\end{pmatrix}";
  }
  return m.to_string();
}

inline std::string rows_csv(const std::vector<std::vector<Int>>& rows) {
  std::string s;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i].str();
    s += "\n";
  }
  return s;
}

inline std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline void print_report(const Io& io, const VerifyReport& r) {
  io.out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "  cases=" << r.cases
         << "  failures=" << r.failures.size();
  for (const auto& [k, v] : r.bounds) io.out << "  " << k << "=" << v;
  io.out << "  time=" << r.seconds << "s\n";
  std::size_t shown = 0;
  for (const auto& f : r.failures) {
    if (++shown > 20) {
      io.out << "  ... " << r.failures.size() - 20 << " more\n";
      break;
    }
    io.out << "  input: " << f.input << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-deformed rationals, continued fractions and rational-knot Jones polynomials", "qrat"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format (default from QRAT_FORMAT)")
      ->envname("QRAT_FORMAT")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  std::string fraction, cf_text, list_text;
  auto* c_qrat = app.add_subcommand("qrat", "q-deformation [r/s]_q = R/S");
  c_qrat->add_option("fraction", fraction, "r/s")->required();

  auto* c_expand = app.add_subcommand("expand", "Regular and negative continued fractions of r/s > 1");
  c_expand->add_option("fraction", fraction, "r/s")->required();

  auto* c_convert = app.add_subcommand("convert", "Convert [a_1,...] <-> [[c_1,...]]");
  c_convert->add_option("expansion", cf_text, "[1,2,1,1] or [[2,2,3]]")->required();

  bool cont_regular = false, cont_inverse = false;
  auto* c_cont = app.add_subcommand("continuant", "q-continuant of a coefficient list");
  c_cont->add_option("coefficients", list_text, "comma-separated list, e.g. 2,2,3")->required();
  c_cont->add_flag("--regular", cont_regular, "Use K+ (regular expansion coefficients)");
  c_cont->add_flag("--inverse", cont_inverse, "Evaluate in q^-1 (negative continuant only)");

  bool mat_normalized = false;
  auto* c_matrix = app.add_subcommand("matrix", "Matrix of convergents of a continued fraction");
  c_matrix->add_option("expansion", cf_text, "[1,2,1,1] or [[2,2,3]]")->required();
  c_matrix->add_flag("--normalized", mat_normalized, "Multiply a regular matrix by q^(a_2+a_4+...)");

  int depth = 3;
  auto* c_farey = app.add_subcommand("farey", "Weighted Farey tree on [1, inf]");
  c_farey->add_option("--depth", depth, "Tree depth")->check(CLI::Range(0, 16));

  std::string quiddity_text;
  auto* c_quid = app.add_subcommand("quiddity", "Classify a quiddity sequence by its matrix");
  c_quid->add_option("--check", quiddity_text, "comma-separated sequence")->required();

  bool clo_prime = false, clo_multi = false, clo_jones = false;
  auto* c_clo = app.add_subcommand("closures", "Closures of the path graph of r/s");
  c_clo->add_option("fraction", fraction, "r/s")->required();
  c_clo->add_flag("--prime", clo_prime, "Use the graph G' (denominator)");
  c_clo->add_flag("--multivariate", clo_multi, "List every closure");
  c_clo->add_flag("--jones", clo_jones, "Use the Jones graph with vertices 1 and 2 tied");

  std::string route = "auto";
  bool jones_latex = false;
  std::optional<long long> v_p_halves;
  int v_sign = 1;
  auto* c_jones = app.add_subcommand("jones", "Normalized Jones polynomial of the rational knot C(r/s)");
  c_jones->add_option("fraction", fraction, "r/s")->required();
  c_jones->add_option("--route", route, "Computation route")
      ->check(CLI::IsMember({"auto", "continuant", "regular", "closures", "weighted", "ptolemy"}));
  c_jones->add_flag("--latex", jones_latex, "Same as --format latex");
  c_jones->add_option("--v-p-halves", v_p_halves, "Also print V(t) = sign t^(p/2) J(-1/t) with this p");
  c_jones->add_option("--v-sign", v_sign, "Sign of V")->check(CLI::IsMember({-1, 1}));

  int seq_n = 0;
  bool seq_triangle = false, seq_csv = false, seq_bfile = false, seq_mirror = false;
  auto add_sequence = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("n", seq_n, "Index (or number of rows with --triangle)")->required()->check(CLI::Range(1, 2000));
    c->add_flag("--triangle", seq_triangle, "Print coefficient rows 1..n");
    c->add_flag("--mirror", seq_mirror, "Use the mirror sequence");
    c->add_flag("--csv", seq_csv, "Comma-separated triangle rows");
    c->add_flag("--bfile", seq_bfile, "OEIS b-file of the triangle read by rows");
    return c;
  };
  auto* c_fib = add_sequence("fib", "q-Fibonacci polynomials");
  auto* c_pell = add_sequence("pell", "q-Pell polynomials");

  std::vector<std::string> suites;
  VerifyOptions vopt;
  auto* c_verify = app.add_subcommand("verify", "Run verification suites");
  c_verify->add_option("--suite", suites, "Suite name (repeatable; default all)");
  c_verify->add_option("--max-sum", vopt.max_sum, "Bound on r+s")->check(CLI::PositiveNumber);
  c_verify->add_option("--max-a-sum", vopt.max_a_sum, "Bound on a_1+...+a_2m (closures)")
      ->check(CLI::Range(1, kMaxClosureVertices - 1));
  c_verify->add_option("--depth", vopt.depth, "Tree depth (mediant)")->check(CLI::Range(1, 16));
  c_verify->add_option("--random-cases", vopt.random_cases, "Number of seeded random cases")->check(CLI::PositiveNumber);
  c_verify->add_option("--seed", vopt.seed, "Seed of the random cases");

  int conj_max = 30;
  auto* c_conj = app.add_subcommand("conjectures", "Unimodality and (1+q+q^2)-divisibility scans");
  c_conj->add_option("--max-sum", conj_max, "Bound on r+s")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Format fmt = format_name == "json" ? Format::Json : format_name == "latex" ? Format::Latex : Format::Text;
  if (jones_latex) fmt = Format::Latex;
  const Io io{out, err, fmt};
  CLI::App* active = app.get_subcommands().front();

  try {
    if (active == c_qrat) {
      const Rational x = parse_rational(fraction);
      const QRational q = qdeform(x);
      if (fmt == Format::Json) emit_json(io, to_json(q, x.was_reduced()));
      else out << (fmt == Format::Latex ? q.to_latex() : q.to_string()) << "\n";
    } else if (active == c_expand) {
      const Rational x = parse_rational(fraction);
      const CFRegular reg = expand_regular(x);
      const CFNegative neg = expand_negative(x);
      if (fmt == Format::Json) {
        Json j = to_json(x);
        j["regular"] = to_json(reg);
        j["negative"] = to_json(neg);
        if (x.was_reduced()) j["reduced"] = true;
        emit_json(io, j);
      } else {
        out << x.to_string() << " = " << to_string(reg) << " = " << to_string(neg) << "\n";
      }
    } else if (active == c_convert) {
      CFRegular reg;
      CFNegative neg;
      if (parse_cf(cf_text, reg, neg)) {
        const CFRegular r = neg_to_reg(neg);
        if (fmt == Format::Json) emit_json(io, to_json(r));
        else out << to_string(r) << "\n";
      } else {
        const CFNegative n = reg_to_neg(reg);
        if (fmt == Format::Json) emit_json(io, to_json(n));
        else out << to_string(n) << "\n";
      }
    } else if (active == c_cont) {
      const auto c = parse_int_list(list_text);
      if (c.empty()) throw ParseError("continuant needs at least one coefficient");
      for (auto v : c) {
        if (v < 1) throw DomainError("continuant coefficients must be positive");
      }
      if (cont_regular && cont_inverse) throw ParseError("--inverse applies to the negative continuant only");
      const LaurentPoly k = cont_regular ? continuant_reg(c)
                                         : continuant_neg(c, cont_inverse ? Variable::QInverse : Variable::Q);
      if (fmt == Format::Json) emit_json(io, to_json(k));
      else out << poly_text(k, fmt) << "\n";
    } else if (active == c_matrix) {
      CFRegular reg;
      CFNegative neg;
      Mat2 m;
      if (parse_cf(cf_text, reg, neg)) {
        if (mat_normalized) throw ParseError("--normalized applies to regular expansions");
        m = matrix_neg(neg);
      } else {
        m = mat_normalized ? matrix_reg_normalized(reg) : matrix_reg(reg);
      }
      if (fmt == Format::Json) emit_json(io, {{"matrix", to_json(m)}, {"det", to_json(m.det())}});
      else out << matrix_text(m, fmt) << "\n";
    } else if (active == c_farey) {
      const FareyTree t = farey_tree(depth);
      if (fmt == Format::Json) {
        emit_json(io, to_json(t));
      } else {
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
          const auto& n = t.nodes[i];
          out << n.node.value.to_string() << "\t"
              << (fmt == Format::Latex ? n.node.label.to_latex() : n.node.label.to_string()) << "\tdepth "
              << n.depth << "\tparents " << n.left_parent.to_string() << ", " << n.right_parent.to_string()
              << "\tparent edge q^" << t.parent_edge_exponent[i] << "\n";
        }
      }
    } else if (active == c_quid) {
      const QuiddityResult r = quiddity_classify(parse_int_list(quiddity_text));
      if (fmt == Format::Json) {
        emit_json(io, to_json(r));
      } else {
        out << to_string(r.kind);
        if (r.sign) out << ": M = " << (*r.sign < 0 ? "-" : "") << "q^" << *r.exponent << " Id";
        else out << ": M = " << matrix_text(r.matrix, fmt);
        out << "\n";
      }
    } else if (active == c_clo) {
      const Rational x = parse_rational(fraction);
      const CFRegular e = expand_regular(x);
      if (clo_jones && clo_prime) throw ParseError("--jones and --prime are exclusive");
      const QuiverPath g = clo_jones ? jones_graph(e) : clo_prime ? build_graph_prime(e) : build_graph(e);
      const ClosureEnumeration all = enumerate_closures(g);
      const IntPoly poly = clo_jones ? jones_closure_count(g) : IntPoly(all.counts);
      std::vector<std::vector<int>> sets;
      if (clo_multi) {
        for (auto& s : closure_sets(all.gf)) {
          if (clo_jones) {
            const bool has1 = std::find(s.begin(), s.end(), 1) != s.end();
            const bool has2 = std::find(s.begin(), s.end(), 2) != s.end();
            if (has1 != has2) continue;
          }
          sets.push_back(std::move(s));
        }
      }
      if (fmt == Format::Json) {
        Json j{{"r", x.r().str()}, {"s", x.s().str()}, {"graph", to_json(g)}, {"polynomial", to_json(poly)}};
        if (clo_multi) j["closures"] = sets;
        emit_json(io, j);
      } else {
        out << "graph " << g.to_string() << "\n" << poly_text(poly, fmt) << "\n";
        for (const auto& s : sets) out << set_text(s) << "\n";
      }
    } else if (active == c_jones) {
      const Rational x = parse_rational(fraction);
      JonesPoly j;
      if (route == "auto") j = jones_polynomial(x);
      else if (route == "continuant") j = jones_via_continuant(x);
      else if (route == "regular") j = jones_via_regular_continuant(x);
      else if (route == "closures") j = jones_via_closures(x, ClosureRoute::ConstrainedCount);
      else if (route == "weighted") j = jones_via_closures(x, ClosureRoute::WeightedGF);
      else j = jones_via_ptolemy(x);
      std::optional<SignedLaurent> v;
      if (v_p_halves) v = to_signed_laurent(j, *v_p_halves, v_sign);
      if (fmt == Format::Json) {
        Json o = to_json(j);
        o["route"] = route;
        if (v) o["v"] = {{"sign", v->sign}, {"p_halves", v->p_halves}, {"body", to_json(v->body)}, {"text", v->to_string()}};
        emit_json(io, o);
      } else {
        out << poly_text(j.j, fmt) << "\n";
        if (v) out << "V(t) = " << v->to_string() << "\n";
      }
    } else if (active == c_fib || active == c_pell) {
      const bool fib = active == c_fib;
      const SequenceKind kind = fib ? (seq_mirror ? SequenceKind::FibMirror : SequenceKind::Fib)
                                    : (seq_mirror ? SequenceKind::PellMirror : SequenceKind::Pell);
      if (seq_triangle || seq_csv || seq_bfile) {
        const auto rows = triangle_rows(kind, seq_n);
        if (seq_bfile) {
          long long idx = 1;
          for (const auto& row : rows)
            for (const auto& c : row) out << idx++ << " " << c.str() << "\n";
        } else if (seq_csv) {
          out << rows_csv(rows);
        } else if (fmt == Format::Json) {
          Json jr = Json::array();
          for (const auto& row : rows) jr.push_back(detail::strings(row));
          emit_json(io, {{"kind", to_string(kind)}, {"rows", jr}});
        } else {
          for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i].str();
            out << "\n";
          }
        }
      } else {
        const auto [p, mirror] = fib ? q_fibonacci(seq_n) : q_pell(seq_n);
        const IntPoly& chosen = seq_mirror ? mirror : p;
        if (fmt == Format::Json) emit_json(io, {{"kind", to_string(kind)}, {"n", seq_n}, {"poly", to_json(chosen)}});
        else out << poly_text(chosen, fmt) << "\n";
      }
    } else if (active == c_verify) {
      const auto& all = verify_suites();
      std::set<std::string> wanted(suites.begin(), suites.end());
      for (const auto& name : wanted) {
        bool known = false;
        for (const auto& [n, f] : all) known = known || n == name;
        if (!known) {
          err << "error: unknown suite '" << name << "'\n" << c_verify->help();
          return 2;
        }
      }
      bool ok = true;
      Json reports = Json::array();
      if (fmt != Format::Json) out << "seed " << vopt.seed << " (std::mt19937_64)\n";
      for (const auto& [name, fn] : all) {
        if (!wanted.empty() && !wanted.count(name)) continue;
        const VerifyReport r = fn(vopt);
        ok = ok && r.passed();
        if (fmt == Format::Json) reports.push_back(to_json(r));
        else print_report(io, r);
      }
      if (fmt == Format::Json) emit_json(io, {{"seed", vopt.seed}, {"passed", ok}, {"reports", reports}});
      return ok ? 0 : 1;
    } else if (active == c_conj) {
      const ConjectureReport r = conjectures(conj_max);
      if (fmt == Format::Json) {
        emit_json(io, to_json(r));
      } else {
        out << "scanned " << r.scanned << " rationals with r+s <= " << r.max_sum << "\n";
        out << "unimodality counterexamples: " << r.unimodality_counterexamples.size() << "\n";
        for (const auto& s : r.unimodality_counterexamples) out << "  " << s << "\n";
        out << "(1+q+q^2)-divisibility counterexamples: " << r.divisibility_counterexamples.size() << "\n";
        for (const auto& s : r.divisibility_counterexamples) out << "  " << s << "\n";
        out << "factorizations found: " << r.divisibility_witnesses.size() << "\n";
        for (const auto& s : r.divisibility_witnesses) out << "  " << s << "\n";
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qrat::cli
