#include "cherednik/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

#include "cherednik/bn_comparison.hpp"
#include "cherednik/json_io.hpp"
#include "cherednik/suites.hpp"

namespace cherednik {

namespace {

struct Options {
  std::string type;
  int max_rhs = 8;
  int max_degree = 8;
  std::string k_long, k_short, c, k_nonreduced;
  std::string mode = "trig";
  std::string suite = "basic";
  bool json = false;
  bool compare_paper = false;
};

ParameterPoint parse_point(const CartanType& t, const Options& o) {
  if (!o.k_nonreduced.empty())
    throw ValidationError("parameters on reflection hypertori avoiding the identity (non-reduced case) are not supported");
  if (!o.c.empty()) {
    if (!o.k_long.empty() || !o.k_short.empty()) throw ValidationError("--c cannot be combined with --k-long/--k-short");
    return ParameterPoint::constant(t, parse_rational(o.c));
  }
  if (!t.irreducible()) throw ValidationError("product types take a constant parameter via --c");
  if (t.simply_laced()) {
    if (o.k_long.empty() || !o.k_short.empty()) throw ValidationError(t.to_string() + " has one length class; pass --c (or --k-long)");
    return ParameterPoint::constant(t, parse_rational(o.k_long));
  }
  if (o.k_long.empty() || o.k_short.empty()) throw ValidationError(t.to_string() + " needs --k-long and --k-short (or --c)");
  return ParameterPoint::long_short(t, parse_rational(o.k_long), parse_rational(o.k_short));
}

void print_lines(std::ostream& out, const CartanType& t, const LineSet& lines) {
  for (const auto& l : lines) out << "  " << l.to_string(t) << "\n";
}

int cmd_roots(const Options& o, std::ostream& out) {
  const RootSystem rs(CartanType::parse(o.type));
  if (o.json) {
    out << to_json(rs).dump(2) << "\n";
    return exit_ok;
  }
  out << rs.type().to_string() << ": rank " << rs.rank() << ", " << rs.roots().size() << " roots, |W| = "
      << weyl_order(rs.type()).get_str() << "\n";
  out << "degrees:";
  for (int d : degrees(rs.type())) out << " " << d;
  out << "\ncartan matrix:\n" << rs.cartan_matrix() << "\n";
  return exit_ok;
}

int cmd_strata(const Options& o, std::ostream& out) {
  const CartanType t = CartanType::parse(o.type);
  const auto strata = point_strata(t);
  if (o.json) {
    Json a = Json::array();
    for (const auto& e : strata) a.push_back(to_json(e));
    out << Json{{"type", t.to_string()}, {"strata", std::move(a)}}.dump(2) << "\n";
    return exit_ok;
  }
  for (const auto& e : strata) out << "node " << e.deleted_node << ": " << e.describe() << "\n";
  return exit_ok;
}

Json lines_json(const CartanType& t, const LineSet& lines) {
  Json a = Json::array();
  for (const auto& l : lines) {
    Json j = to_json(l);
    j["text"] = l.to_string(t);
    a.push_back(std::move(j));
  }
  return a;
}

int cmd_rational_locus(const Options& o, std::ostream& out) {
  const CartanType t = CartanType::parse(o.type);
  const auto locus = djo_locus(t);
  const auto lines = lines_up_to_height(locus, o.max_rhs);
  if (o.json) {
    Json j = to_json(locus);
    j["max_rhs"] = o.max_rhs;
    j["lines"] = lines_json(t, lines);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "rational singular lines of " << t.to_string() << " up to height " << o.max_rhs << ":\n";
  print_lines(out, t, lines);
  return exit_ok;
}

int cmd_trig_locus(const Options& o, std::ostream& out) {
  const CartanType t = CartanType::parse(o.type);
  const auto rational = lines_up_to_height(djo_locus(t), o.max_rhs);
  const auto trig = trig_lines_up_to_height(t, o.max_rhs);
  if (o.json) {
    Json a = Json::array();
    for (const auto& l : trig) {
      Json j = to_json(l);
      j["text"] = l.to_string(t);
      j["novel"] = !rational.count(l);
      a.push_back(std::move(j));
    }
    out << Json{{"type", t.to_string()}, {"classes", class_labels(t)}, {"max_rhs", o.max_rhs}, {"lines", std::move(a)}}.dump(2)
        << "\n";
    return exit_ok;
  }
  out << "trigonometric reducibility lines of " << t.to_string() << " up to height " << o.max_rhs << ":\n";
  for (const auto& l : trig) out << "  " << l.to_string(t) << (rational.count(l) ? "" : "   [novel]") << "\n";
  return exit_ok;
}

int cmd_additional(const Options& o, std::ostream& out) {
  const CartanType t = CartanType::parse(o.type);
  const bool bn_compare = o.compare_paper && t.irreducible() && t.factors()[0].letter == 'B' && t.rank() >= 3;
  if (bn_compare) {
    const auto c = compare_bn(t.rank(), o.max_rhs);
    if (o.json) {
      out << to_json(c).dump(2) << "\n";
    } else {
      out << "computed additional lines:\n";
      print_lines(out, t, c.computed);
      out << "printed reading (2p-1)k_long = 2q, minus rational lines:\n";
      print_lines(out, t, c.printed);
      out << "transposed reading 2q k_long = 2p-1, minus rational lines:\n";
      print_lines(out, t, c.transposed);
      out << "computed " << (c.matches_printed ? "MATCHES" : "DOES NOT MATCH") << " the printed reading\n";
      out << "computed " << (c.matches_transposed ? "MATCHES" : "DOES NOT MATCH") << " the transposed reading\n";
      for (const auto& a : c.adjudication)
        out << "oracle on D" << t.rank() << " at c = " << to_string(a.k_long) << " (" << a.reading << "): "
            << (a.singular_degree ? "singular vector in degree " + std::to_string(*a.singular_degree)
                                  : "none <= " + std::to_string(a.max_degree))
            << "\n";
    }
    return exit_ok;
  }
  const auto lines = additional_lines(t, o.max_rhs);
  Json comparison = nullptr;
  if (o.compare_paper) {
    // F4, G2 and C_n reference lists, instantiated at the same height.
    LineSet expected;
    bool known = true;
    const auto& f = t.factors()[0];
    if (!t.irreducible()) known = false;
    else if (f.letter == 'F')
      for (int l = 1; l <= o.max_rhs; l += 2) {
        expected.insert(CanonicalLine::normalized({6, 2}, l));
        expected.insert(CanonicalLine::normalized({4, 0}, l));
      }
    else if (f.letter == 'G')
      for (int l = 1; l <= o.max_rhs; ++l) {
        if (l % 3) expected.insert(CanonicalLine::normalized({3, 0}, l));
      }
    else if (f.letter != 'C' && !(f.letter == 'B' && f.rank == 2) && !f.simply_laced())
      known = false;
    std::erase_if(expected, [&](const CanonicalLine& l) { return l.height() > o.max_rhs; });
    if (known) comparison = Json{{"reference", lines_json(t, expected)}, {"matches", line_set(lines) == expected}};
  }
  if (o.json) {
    Json a = Json::array();
    for (const auto& l : lines) {
      Json j = to_json(l.line);
      j["text"] = l.line.to_string(t);
      j["verified"] = l.verified;
      a.push_back(std::move(j));
    }
    Json j{{"type", t.to_string()}, {"classes", class_labels(t)}, {"max_rhs", o.max_rhs}, {"additional", std::move(a)}};
    if (o.compare_paper) j["comparison"] = comparison;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "additional trigonometric lines of " << t.to_string() << " up to height " << o.max_rhs << ":\n";
  for (const auto& l : lines) out << "  " << l.line.to_string(t) << (l.verified ? "" : "   [UNVERIFIED]") << "\n";
  if (lines.empty()) out << "  (none)\n";
  if (o.compare_paper) {
    if (comparison.is_null()) out << "no reference list to compare against\n";
    else out << "reference list " << (comparison["matches"].get<bool>() ? "MATCHES" : "DOES NOT MATCH") << "\n";
  }
  return exit_ok;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const CartanType t = CartanType::parse(o.type);
  const auto c = parse_point(t, o);
  Json j;
  if (o.mode == "rational") {
    j = to_json(t, is_singular(t, c));
  } else if (o.mode == "trig") {
    if (!t.irreducible()) throw ValidationError("trig mode needs an irreducible type");
    j = to_json(is_reducible_trig(t, c));
  } else {
    throw ValidationError("--mode must be rational or trig");
  }
  Json full{{"type", t.to_string()}, {"mode", o.mode}, {"parameters", Json::object()}};
  const auto labels = class_labels(t);
  const auto values = as_vector(c);
  for (std::size_t i = 0; i < labels.size(); ++i) full["parameters"][labels[i]] = to_string(values[i]);
  full["reducible"] = j["reducible"];
  full["witness"] = j["witness"];
  if (o.json) {
    out << full.dump(2) << "\n";
    return exit_ok;
  }
  out << t.to_string() << " " << c.to_string() << " [" << o.mode << "]: " << (full["reducible"].get<bool>() ? "reducible" : "irreducible");
  if (!full["witness"].is_null())
    out << " (stratum " << full["witness"]["stratum"].get<std::string>() << ", " << full["witness"]["family_source"].get<std::string>()
        << ", l = " << full["witness"]["l"].get<std::string>() << ")";
  out << "\n";
  return exit_ok;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const CartanType t = CartanType::parse(o.type);
  const auto c = parse_point(t, o);
  if (o.max_degree < 1) throw ValidationError("--max-degree must be at least 1");
  if (t.rank() > 3 || o.max_degree > 15) err << "warning: the oracle is meant for rank <= 3 and degree <= 15\n";
  const DunklContext ctx(c);
  const auto sv = find_singular_degree(ctx, o.max_degree);
  if (o.json) {
    Json j{{"type", t.to_string()}, {"parameters", c.to_string()}, {"max_degree", o.max_degree}};
    j["found"] = sv.has_value();
    j["degree"] = sv ? Json(sv->degree) : Json(nullptr);
    j["witness"] = sv ? to_json(sv->witness) : Json(nullptr);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  if (!sv) {
    out << "none <= " << o.max_degree << "\n";
    return exit_ok;
  }
  out << "singular vector in degree " << sv->degree << ":";
  for (const auto& [e, coeff] : sv->witness.terms()) {
    out << " " << (coeff < 0 ? "-" : "+") << " " << to_string(abs(coeff));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) out << "*x" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  out << "\n";
  return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto results = run_suite(o.suite, threads_from_env());
  bool ok = true;
  Json a = Json::array();
  for (const auto& r : results) {
    ok &= r.passed;
    if (o.json) {
      a.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"limit_seconds", r.limit_seconds}});
      continue;
    }
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << std::fixed << std::setprecision(2) << r.seconds
        << " s)" << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
  }
  if (o.json) out << Json{{"suite", o.suite}, {"passed", ok}, {"results", std::move(a)}}.dump(2) << "\n";
  return ok ? exit_ok : exit_suite_failed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root-system tools for Cherednik algebra reducibility loci", "cherednik"};
  app.require_subcommand(1);
  Options o;

  const auto add_type = [&](CLI::App* sub) { sub->add_option("--type", o.type, "Cartan type, e.g. B4 or A3xA1")->required(); };
  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--k-long", o.k_long, "value on long-root reflections (p/q)");
    sub->add_option("--k-short", o.k_short, "value on short-root reflections (p/q)");
    sub->add_option("--c", o.c, "constant value on all reflections (p/q)");
    sub->add_option("--k-nonreduced", o.k_nonreduced, "value on hypertori avoiding the identity (rejected)");
  };

  auto* roots = app.add_subcommand("roots", "root system data");
  add_type(roots);
  add_json(roots);
  auto* strata = app.add_subcommand("strata", "point strata from extended-diagram node deletion");
  add_type(strata);
  add_json(strata);
  auto* rational = app.add_subcommand("rational-locus", "canonical lines of the rational singular locus");
  add_type(rational);
  rational->add_option("--max-rhs", o.max_rhs, "height bound")->check(CLI::PositiveNumber);
  add_json(rational);
  auto* trig = app.add_subcommand("trig-locus", "trigonometric reducibility lines");
  add_type(trig);
  trig->add_option("--max-rhs", o.max_rhs, "height bound")->check(CLI::PositiveNumber);
  add_json(trig);
  auto* additional = app.add_subcommand("additional", "trigonometric lines that are not rational lines");
  add_type(additional);
  additional->add_option("--max-rhs", o.max_rhs, "height bound")->check(CLI::PositiveNumber);
  additional->add_flag("--compare-paper", o.compare_paper, "compare with the reference lists");
  add_json(additional);
  auto* decide = app.add_subcommand("decide", "decide reducibility at a parameter point");
  add_type(decide);
  add_params(decide);
  decide->add_option("--mode", o.mode, "rational or trig")->check(CLI::IsMember({"rational", "trig"}));
  add_json(decide);
  auto* oracle = app.add_subcommand("oracle", "search for singular polynomials with Dunkl operators");
  add_type(oracle);
  add_params(oracle);
  oracle->add_option("--max-degree", o.max_degree, "degree bound")->check(CLI::PositiveNumber);
  add_json(oracle);
  auto* check = app.add_subcommand("check", "run the verification suites");
  check->add_option("--suite", o.suite, "basic or full")->check(CLI::IsMember({"basic", "full"}));
  add_json(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*roots) return cmd_roots(o, out);
    if (*strata) return cmd_strata(o, out);
    if (*rational) return cmd_rational_locus(o, out);
    if (*trig) return cmd_trig_locus(o, out);
    if (*additional) return cmd_additional(o, out);
    if (*decide) return cmd_decide(o, out);
    if (*oracle) return cmd_oracle(o, out, err);
    if (*check) return cmd_check(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace cherednik
