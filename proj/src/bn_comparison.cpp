#include "cherednik/bn_comparison.hpp"

#include <numeric>

#include "cherednik/dunkl.hpp"

namespace cherednik {

namespace {

CartanType bn(int n) { return CartanType({{'B', n}}); }

LineSet minus(const LineSet& a, const LineSet& b) {
  LineSet out;
  for (const auto& l : a)
    if (!b.count(l)) out.insert(l);
  return out;
}

LineSet rational_bn(int n, int h) { return lines_up_to_height(djo_locus(bn(n)), h); }

// q ranges over n/2 < q <= n-1.
int q_min(int n) { return n / 2 + 1; }

Json set_json(const LineSet& s, const CartanType& t) {
  Json a = Json::array();
  for (const auto& l : s) {
    Json j = to_json(l);
    j["text"] = l.to_string(t);
    a.push_back(std::move(j));
  }
  return a;
}

}  // namespace

LineSet dn_pullback_additional(int n, int max_height) {
  SingularLocus pulled{bn(n), {}};
  std::vector<int> ds = degrees(CartanType({{'D', n}}));
  for (int d : ds) pulled.families.push_back({{d, 0}, RhsCondition::not_divisible_by(d), "D" + std::to_string(n)});
  return minus(lines_up_to_height(pulled, max_height), rational_bn(n, max_height));
}

LineSet bn_closed_form_additional(int n, int max_height) {
  LineSet out;
  for (int q = q_min(n); q <= n - 1; ++q)
    for (int m = 1; m <= max_height; m += 2)
      if (std::gcd(m, q) == 1 && 2 * q <= max_height) out.insert(CanonicalLine::normalized({2 * q, 0}, m));
  return minus(out, rational_bn(n, max_height));
}

LineSet bn_printed_lines(int n, int max_height) {
  LineSet out;
  for (int q = q_min(n); q <= n - 1; ++q)
    for (int p = 1; 2 * p - 1 <= max_height; ++p)
      if (std::gcd(2 * p - 1, q) == 1) {
        auto line = CanonicalLine::normalized({2 * p - 1, 0}, 2 * q);
        if (line.height() <= max_height) out.insert(line);
      }
  return out;
}

LineSet bn_transposed_lines(int n, int max_height) {
  LineSet out;
  for (int q = q_min(n); q <= n - 1; ++q)
    for (int p = 1; 2 * p - 1 <= max_height; ++p)
      if (std::gcd(2 * p - 1, q) == 1) {
        auto line = CanonicalLine::normalized({2 * q, 0}, 2 * p - 1);
        if (line.height() <= max_height) out.insert(line);
      }
  return out;
}

BnComparison compare_bn(int n, int max_height, int oracle_degree) {
  if (n < 3) throw ValidationError("the B_n comparison needs n >= 3");
  BnComparison c;
  c.n = n;
  c.max_height = max_height;
  const auto lines = additional_lines(bn(n), max_height);
  c.computed = line_set(lines);
  c.all_verified = std::all_of(lines.begin(), lines.end(), [](const AdditionalLine& l) { return l.verified; });
  c.dn_pullback = dn_pullback_additional(n, max_height);
  c.closed_form = bn_closed_form_additional(n, max_height);
  const LineSet rational = rational_bn(n, max_height);
  c.printed = minus(bn_printed_lines(n, max_height), rational);
  c.transposed = minus(bn_transposed_lines(n, max_height), rational);
  c.consistent = c.computed == c.dn_pullback && c.computed == c.closed_form;
  c.matches_printed = c.computed == c.printed;
  c.matches_transposed = c.computed == c.transposed;

  if (oracle_degree > 0) {
    // Representatives with q = n-1, p = 1 from each reading.
    const int q = n - 1;
    const CartanType dn = CartanType({{'D', n}});
    const std::pair<std::string, CanonicalLine> reps[] = {
        {"printed", CanonicalLine::normalized({1, 0}, 2 * q)},
        {"transposed", CanonicalLine::normalized({2 * q, 0}, 1)},
    };
    for (const auto& [reading, line] : reps) {
      Adjudication a;
      a.reading = reading;
      a.line = line;
      a.k_long = Rational(Integer(static_cast<long>(line.rhs)), Integer(static_cast<long>(line.coeffs[0])));
      a.k_long.canonicalize();
      const auto sample = sample_points(line, 1).front();
      a.trig_reducible = is_reducible_trig(bn(n), ParameterPoint::long_short(bn(n), sample[0], sample[1])).reducible;
      a.max_degree = oracle_degree;
      const DunklContext ctx(ParameterPoint::constant(dn, a.k_long));
      if (const auto sv = find_singular_degree(ctx, oracle_degree)) a.singular_degree = sv->degree;
      c.adjudication.push_back(std::move(a));
    }
  }
  return c;
}

Json to_json(const BnComparison& c) {
  const CartanType t = bn(c.n);
  Json adj = Json::array();
  for (const auto& a : c.adjudication) {
    adj.push_back({{"reading", a.reading},
                   {"line", a.line.to_string(t)},
                   {"k_long", to_string(a.k_long)},
                   {"trig_reducible", a.trig_reducible},
                   {"oracle_max_degree", a.max_degree},
                   {"oracle_singular_degree", a.singular_degree ? Json(*a.singular_degree) : Json(nullptr)}});
  }
  return {{"type", t.to_string()},
          {"max_rhs", c.max_height},
          {"computed", set_json(c.computed, t)},
          {"printed_reading", set_json(c.printed, t)},
          {"transposed_reading", set_json(c.transposed, t)},
          {"computed_matches_printed", c.matches_printed},
          {"computed_matches_transposed", c.matches_transposed},
          {"discrepancy", c.matches_printed ? "none" : (c.matches_transposed ? "printed line family has its two sides exchanged" : "matches neither reading")},
          {"internal_consistency", {{"dn_pullback_equal", c.computed == c.dn_pullback},
                                    {"closed_form_equal", c.computed == c.closed_form},
                                    {"all_lines_sample_verified", c.all_verified}}},
          {"oracle_adjudication", std::move(adj)}};
}

}  // namespace cherednik
