#include "cherednik/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cherednik/bn_comparison.hpp"
#include "cherednik/dunkl.hpp"
#include "cherednik/trig_locus.hpp"

namespace cherednik {

namespace {

CartanType type(const std::string& s) { return CartanType::parse(s); }

std::string describe(const LineSet& s, const CartanType& t) {
  std::string out = "{";
  for (const auto& l : s) out += (out.size() > 1 ? "; " : "") + l.to_string(t);
  return out + "}";
}

std::vector<CartanType> irreducible_types_up_to_rank(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(CartanType({{'A', n}}));
  for (int n = 2; n <= max_rank; ++n) out.push_back(CartanType({{'B', n}}));
  for (int n = 3; n <= max_rank; ++n) out.push_back(CartanType({{'C', n}}));
  for (int n = 4; n <= max_rank; ++n) out.push_back(CartanType({{'D', n}}));
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back(CartanType({{'E', n}}));
  if (max_rank >= 4) out.push_back(CartanType({{'F', 4}}));
  if (max_rank >= 2) out.push_back(CartanType({{'G', 2}}));
  return out;
}

std::string c1_strata() {
  const auto types_of = [](const CartanType& t) {
    std::multiset<std::string> s;
    for (const auto& e : point_strata(t)) s.insert(e.sub_type.to_string());
    return s;
  };
  const std::multiset<std::string> f4{"F4", "B4", "A1xC3", "A2xA2", "A1xA3"};
  const std::multiset<std::string> g2{"G2", "A2", "A1xA1"};
  if (types_of(type("F4")) != f4) return "F4 strata differ";
  if (types_of(type("G2")) != g2) return "G2 strata differ";
  for (const auto& e : point_strata(type("F4"))) {
    if (e.sub_type == type("A2xA2") && e.class_images() != std::vector<std::vector<int>>{{0}, {1}})
      return "A2xA2 in F4 should have one long and one short factor";
    if (e.sub_type == type("A1xA3") && e.class_images() != std::vector<std::vector<int>>{{1}, {0}})
      return "A3xA1 in F4 should have A3 long and A1 short";
  }
  for (int n = 3; n <= 6; ++n) {
    const CartanType dn({{'D', n}});
    bool found = false;
    for (const auto& e : point_strata(CartanType({{'B', n}})))
      found |= e.sub_type == dn && e.class_images() == std::vector<std::vector<int>>{{0}};
    if (!found) return "D" + std::to_string(n) + " (long) missing from the strata of B" + std::to_string(n);
  }
  return {};
}

std::string expect_additional(const CartanType& t, int h, const LineSet& expected) {
  const auto lines = additional_lines(t, h);
  for (const auto& l : lines)
    if (!l.verified) return "line " + l.line.to_string(t) + " failed sample verification";
  const LineSet got = line_set(lines);
  if (got != expected) return "got " + describe(got, t) + ", expected " + describe(expected, t);
  return {};
}

std::string c2_f4() {
  LineSet expected;
  for (int l = 1; l <= 7; l += 2) {
    expected.insert(CanonicalLine::normalized({6, 2}, l));
    expected.insert(CanonicalLine::normalized({4, 0}, l));
  }
  return expect_additional(type("F4"), 7, expected);
}

std::string c3_g2() {
  LineSet expected;
  for (int l : {1, 2, 4, 5}) expected.insert(CanonicalLine::normalized({3, 0}, l));
  return expect_additional(type("G2"), 5, expected);
}

std::string c4_cn() {
  for (int n = 2; n <= 6; ++n) {
    const CartanType t({{'C', n}});
    const auto lines = additional_lines(t, 12);
    if (!lines.empty()) return "C" + std::to_string(n) + " has additional lines " + describe(line_set(lines), t);
  }
  return {};
}

std::string c5_bn() {
  std::string readings;
  for (int n = 3; n <= 5; ++n) {
    const auto c = compare_bn(n, 12, 0);
    const std::string tag = "B" + std::to_string(n);
    if (c.computed.empty()) return tag + ": no additional lines computed";
    if (!c.all_verified) return tag + ": an additional line failed sample verification";
    if (c.computed != c.dn_pullback) return tag + ": computed set differs from the D_n pullback";
    if (c.computed != c.closed_form) return tag + ": computed set differs from the closed form";
    if (c.matches_printed == c.matches_transposed) return tag + ": must match exactly one reading";
    readings += tag + (c.matches_transposed ? " matches transposed; " : " matches printed; ");
  }
  return readings.find("printed") != std::string::npos && readings.find("transposed") != std::string::npos
             ? "readings disagree across n: " + readings
             : std::string{};
}

std::string c6_constant_grid() {
  for (const char* name : {"A2", "A3", "D4"}) {
    const CartanType t = type(name);
    const auto ds = degrees(t);
    for (int q = 2; q <= 12; ++q)
      for (int p = 1; p <= 12; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const Rational c(p, q);
        const bool trig = is_reducible_trig(t, ParameterPoint::constant(t, c)).reducible;
        const bool rule = constant_reducibility(t, c);
        const bool divides = std::any_of(ds.begin(), ds.end(), [&](int d) { return d % q == 0; });
        if (trig != rule || rule != divides)
          return std::string(name) + " disagrees at c=" + std::to_string(p) + "/" + std::to_string(q);
      }
  }
  return {};
}

std::string c7_oracle_pins() {
  const CartanType a1 = type("A1");
  const auto run = [&](const Rational& c, int d) { return find_singular_degree(DunklContext(ParameterPoint::constant(a1, c)), d); };
  const auto half = run(Rational(1, 2), 4);
  if (!half || half->degree != 1 || !(half->witness == RationalPolynomial::variable(1, 0)))
    return "A1 at c=1/2 should give degree 1 with witness x";
  for (int d : {3, 5}) {
    const auto sv = run(Rational(d, 2), 12);
    if (!sv || sv->degree != d) return "A1 at c=" + std::to_string(d) + "/2 should give degree " + std::to_string(d);
  }
  if (run(Rational(1, 4), 12)) return "A1 at c=1/4 should have no singular vector up to degree 12";
  return {};
}

std::vector<Rational> small_grid() {
  std::set<Rational> values;
  for (int q = 1; q <= 3; ++q)
    for (int p = -3; p <= 3; ++p) {
      Rational r(p, q);
      r.canonicalize();
      values.insert(r);
    }
  return {values.begin(), values.end()};
}

std::string c8_oracle_tables() {
  const auto grid = small_grid();
  int checked = 0;
  for (const char* name : {"A2", "B2"}) {
    const CartanType t = type(name);
    std::vector<ParameterPoint> points;
    if (t.simply_laced())
      for (const auto& c : grid) points.push_back(ParameterPoint::constant(t, c));
    else
      for (const auto& a : grid)
        for (const auto& b : grid) points.push_back(ParameterPoint::long_short(t, a, b));
    for (const auto& c : points) {
      ++checked;
      if (find_singular_degree(DunklContext(c), 12) && !is_singular(t, c).member)
        return std::string(name) + ": singular vector at " + c.to_string() + " outside the rational locus";
    }
  }
  for (const char* name : {"A1", "A2"}) {
    const CartanType t = type(name);
    for (const auto& c : grid) {
      const auto point = ParameterPoint::constant(t, c);
      if (is_singular(t, point).member && !find_singular_degree(DunklContext(point), 12))
        return std::string(name) + ": no singular vector up to degree 12 at singular c=" + to_string(c);
    }
  }
  return checked > 0 ? std::string{} : "empty grid";
}

std::string c9_degrees() {
  for (const auto& t : irreducible_types_up_to_rank(8)) {
    const auto parent_degrees = degrees(t);
    const auto pw = poincare_polynomial(t);
    for (const auto& e : point_strata(t)) {
      for (int d : degrees(e.sub_type))
        if (std::none_of(parent_degrees.begin(), parent_degrees.end(), [&](int D) { return D % d == 0; }))
          return "degree " + std::to_string(d) + " of " + e.sub_type.to_string() + " divides no degree of " + t.to_string();
      if (!pw.divmod(poincare_polynomial(e.sub_type)).second.is_zero())
        return "P(" + e.sub_type.to_string() + ") does not divide P(" + t.to_string() + ")";
    }
  }
  const auto [q, r] = poincare_polynomial(type("B2")).divmod(poincare_polynomial(type("A1xA1")));
  if (!r.is_zero() || !(q == UnivariatePolynomial<Integer>({1, 0, 1}))) return "P_B2 / P_A1xA1 != 1 + t^2";
  return {};
}

RationalPolynomial random_polynomial(std::mt19937& rng, int nvars, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-6, 6), den(1, 5), terms(1, 6);
  RationalPolynomial p(nvars);
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    Exponents e(nvars, 0);
    int left = deg(rng);
    for (int i = 0; i < nvars - 1; ++i) {
      std::uniform_int_distribution<int> share(0, left);
      e[i] = share(rng);
      left -= e[i];
    }
    e[nvars - 1] = left;
    Rational c(num(rng), den(rng));
    c.canonicalize();
    p.add_term(std::move(e), c);
  }
  return p;
}

std::string c10_commutativity() {
  std::mt19937 rng(20061014);
  std::uniform_int_distribution<int> num(-7, 7), den(1, 9);
  const auto random_rational = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  for (const char* name : {"A2", "B2", "G2"}) {
    const CartanType t = type(name);
    for (int point = 0; point < 5; ++point) {
      const Rational a = random_rational(), b = random_rational();
      const DunklContext ctx(ParameterPoint::long_short(t, a, b));
      for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_polynomial(rng, t.rank(), 5);
        const auto d0 = dunkl_apply(ctx, 0, f), d1 = dunkl_apply(ctx, 1, f);
        if (!(dunkl_apply(ctx, 0, d1) == dunkl_apply(ctx, 1, d0)))
          return std::string(name) + ": Dunkl operators do not commute at " + ctx.parameters().to_string();
      }
    }
  }
  return {};
}

std::string i1_root_data() {
  for (const auto& t : irreducible_types_up_to_rank(8)) {
    const RootSystem rs(t);
    const auto ds = degrees(t);
    if (static_cast<int>(rs.roots().size()) != root_count(t)) return t.to_string() + ": wrong root count";
    if (identify_diagram(rs.cartan_matrix()) != t) return t.to_string() + ": identification round trip failed";
    int sum = 0;
    for (int d : ds) sum += d - 1;
    if (sum != static_cast<int>(rs.num_positive())) return t.to_string() + ": sum of (d-1) != positive roots";
    if (poincare_polynomial(t).evaluate(1) != weyl_order(t)) return t.to_string() + ": P(1) != |W|";
    const auto ext = extended_diagram(t);
    IntVector theta = IntVector::Zero(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) theta(i) = ext.marks[i + 1];
    const auto idx = rs.find(theta);
    if (!idx || rs.length_class(*idx).cls != 0 || theta != rs.highest_root()) return t.to_string() + ": marks do not give the long highest root";
    const auto strata = point_strata(t);
    if (strata.front().sub_type != t) return t.to_string() + ": identity stratum missing";
  }
  return {};
}

std::string i2_containment() {
  for (const auto& t : irreducible_types_up_to_rank(4)) {
    const auto rational = lines_up_to_height(djo_locus(t), 8);
    const auto trig = trig_lines_up_to_height(t, 8);
    for (const auto& l : rational)
      if (!trig.count(l)) return t.to_string() + ": rational line " + l.to_string(t) + " missing from the trig lines";
  }
  return {};
}

std::string i3_a2xa2_in_f4() {
  const CartanType f4 = type("F4");
  const auto strata = point_strata(f4);
  const auto it = std::find_if(strata.begin(), strata.end(), [](const auto& e) { return e.sub_type.to_string() == "A2xA2"; });
  if (it == strata.end()) return "A2xA2 stratum missing";
  const auto grid = small_grid();
  for (const auto& a : grid)
    for (const auto& b : grid) {
      const auto c = ParameterPoint::long_short(f4, a, b);
      if (is_singular(it->sub_type, restrict_parameters(*it, c)).member && !is_singular(f4, c).member)
        return "pullback of Sing(A2xA2) leaves the F4 locus at " + c.to_string();
    }
  return {};
}

}  // namespace

std::vector<Check> acceptance_checks() {
  return {
      {"C1", "point strata of F4, G2 and D_n in B_n", 1.0, c1_strata},
      {"C2", "F4 additional lines at height 7", 10.0, c2_f4},
      {"C3", "G2 additional lines at height 5", 5.0, c3_g2},
      {"C4", "C_n has no additional lines (n = 2..6, height 12)", 60.0, c4_cn},
      {"C5", "B_n additional lines: internal consistency and reading comparison", 120.0, c5_bn},
      {"C6", "constant parameters: trig decision vs c = j/d_i", 10.0, c6_constant_grid},
      {"C7", "Dunkl oracle pins for A1", 1.0, c7_oracle_pins},
      {"C8", "Dunkl oracle vs rational tables on small grids", 300.0, c8_oracle_tables},
      {"C9", "Chevalley divisibility and Poincare quotients", 10.0, c9_degrees},
      {"C10", "Dunkl operators commute (A2, B2, G2)", 30.0, c10_commutativity},
  };
}

std::vector<Check> invariant_checks() {
  return {
      {"I1", "root data, identification round trip, degrees, marks (rank <= 8)", 60.0, i1_root_data},
      {"I2", "rational lines are trigonometric lines (rank <= 4, height 8)", 60.0, i2_containment},
      {"I3", "Sing(A2xA2) pulls back into Sing(F4)", 60.0, i3_a2xa2_in_f4},
  };
}

CheckResult run_check(const Check& check) {
  CheckResult r{check.id, check.title, false, {}, 0, check.limit_seconds};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = check.body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && r.seconds > r.limit_seconds) {
    r.passed = false;
    std::ostringstream os;
    os << "took " << r.seconds << " s, limit " << r.limit_seconds << " s";
    r.detail = os.str();
  }
  return r;
}

std::vector<CheckResult> run_suite(const std::string& suite, int threads) {
  if (suite != "basic" && suite != "full") throw ValidationError("unknown suite '" + suite + "' (basic|full)");
  auto checks = acceptance_checks();
  if (suite == "full")
    for (auto& c : invariant_checks()) checks.push_back(std::move(c));

  std::vector<CheckResult> results(checks.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) results[i] = run_check(checks[i]);
    return results;
  }
  for (std::size_t begin = 0; begin < checks.size(); begin += threads) {
    std::vector<std::future<CheckResult>> batch;
    for (std::size_t i = begin; i < std::min(checks.size(), begin + threads); ++i)
      batch.push_back(std::async(std::launch::async, run_check, std::cref(checks[i])));
    for (std::size_t k = 0; k < batch.size(); ++k) results[begin + k] = batch[k].get();
  }
  return results;
}

int threads_from_env() {
  const char* v = std::getenv("CHEREDNIK_THREADS");
  if (!v) return 1;
  const int n = std::atoi(v);
  return n > 0 ? n : 1;
}

}  // namespace cherednik
