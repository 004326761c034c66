#include "cherednik/singular_locus.hpp"

#include <algorithm>
#include <numeric>

#include "cherednik/root_system.hpp"

namespace cherednik {

bool RhsCondition::admits(const Integer& l) const {
  if (l < 1) return false;
  switch (kind) {
    case Kind::any:
      return true;
    case Kind::not_divisible:
      return l % modulus != 0;
    case Kind::residues: {
      const long r = Integer(l % modulus).get_si();
      return std::find(residues.begin(), residues.end(), r) != residues.end();
    }
    case Kind::coprime:
      return gcd(l, Integer(modulus)) == 1;
  }
  return false;
}

CanonicalLine CanonicalLine::normalized(std::vector<std::int64_t> coeffs, std::int64_t rhs) {
  std::int64_t g = std::abs(rhs);
  for (auto c : coeffs) g = std::gcd(g, c);
  if (g == 0) throw ValidationError("degenerate line with all coefficients zero");
  const auto first = std::find_if(coeffs.begin(), coeffs.end(), [](auto c) { return c != 0; });
  if (first == coeffs.end()) throw ValidationError("line has no nonzero coefficient");
  if (*first < 0) g = -g;
  for (auto& c : coeffs) c /= g;
  return {std::move(coeffs), rhs / g};
}

std::int64_t CanonicalLine::height() const {
  std::int64_t h = std::abs(rhs);
  for (auto c : coeffs) h = std::max(h, std::abs(c));
  return h;
}

bool CanonicalLine::contains(const std::vector<Rational>& point) const {
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += Rational(Integer(static_cast<long>(coeffs[i]))) * point.at(i);
  return s == Rational(Integer(static_cast<long>(rhs)));
}

std::string CanonicalLine::to_string(const CartanType& type) const {
  const auto labels = class_labels(type);
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!s.empty()) s += coeffs[i] < 0 ? " - " : " + ";
    else if (coeffs[i] < 0) s += "-";
    const auto mag = std::abs(coeffs[i]);
    if (mag != 1) s += std::to_string(mag);
    s += labels.at(i);
  }
  return s + " = " + std::to_string(rhs);
}

std::vector<std::string> class_labels(const CartanType& t) {
  std::vector<std::string> out;
  const bool single = t.irreducible();
  for (const auto& id : t.classes()) {
    const bool sl = t.factors()[id.factor].simply_laced();
    std::string name = sl ? "c" : (id.cls == 0 ? "k_long" : "k_short");
    if (!single) name += "[" + std::to_string(id.factor) + "]";
    out.push_back(std::move(name));
  }
  return out;
}

std::vector<Rational> as_vector(const ParameterPoint& c) {
  std::vector<Rational> out;
  for (const auto& id : c.type().classes()) out.push_back(c[id]);
  return out;
}

std::vector<LineFamily> factor_families(const Factor& f) {
  std::vector<LineFamily> out;
  const auto odd = RhsCondition::not_divisible_by(2);
  if (f.simply_laced()) {
    auto ds = degrees(CartanType({f}));
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    for (int d : ds) out.push_back({{d}, RhsCondition::not_divisible_by(d), "degree " + std::to_string(d)});
    return out;
  }
  const int n = f.rank;
  if (f.letter == 'B' || f.letter == 'C') {
    // k1 lives on the e_i +- e_j reflections, k2 on the sign changes.
    // For B these are (long, short); for C the lengths swap.
    const int k1 = f.letter == 'B' ? 0 : 1, k2 = 1 - k1;
    for (int j = 0; j <= n - 1; ++j) {
      std::vector<int> a(2, 0);
      a[k1] = 2 * j;
      a[k2] = 2;
      out.push_back({a, odd, "2jk1+2k2=l (j=" + std::to_string(j) + ")"});
    }
    for (int j = 2; j <= n; ++j) {
      std::vector<int> a(2, 0);
      a[k1] = j;
      out.push_back({a, RhsCondition::coprime_to(j), "jk1=l (j=" + std::to_string(j) + ")"});
    }
    return out;
  }
  // k1 long, k2 short, u = k1 + k2.
  if (f.letter == 'F') {
    out = {
        {{2, 0}, odd, "2k1=l"},
        {{0, 2}, odd, "2k2=l"},
        {{4, 2}, odd, "2k1+2u=l"},
        {{2, 4}, odd, "2k2+2u=l"},
        {{3, 0}, RhsCondition::not_divisible_by(3), "3k1=l"},
        {{0, 3}, RhsCondition::not_divisible_by(3), "3k2=l"},
        {{2, 2}, odd, "2u=l"},
        {{4, 4}, odd, "4u=l"},
        {{6, 6}, RhsCondition::residues_mod(12, {1, 5, 7, 11}), "6u=l"},
    };
    return out;
  }
  // G2
  out = {
      {{2, 0}, odd, "2k1=l"},
      {{0, 2}, odd, "2k2=l"},
      {{3, 3}, RhsCondition::not_divisible_by(3), "3u=l"},
  };
  return out;
}

SingularLocus djo_locus(const CartanType& t) {
  SingularLocus locus{t, {}};
  const auto classes = t.classes();
  for (int f = 0; f < static_cast<int>(t.factors().size()); ++f) {
    for (auto fam : factor_families(t.factors()[f])) {
      std::vector<int> coeffs(classes.size(), 0);
      for (std::size_t k = 0; k < fam.coeffs.size(); ++k) coeffs[t.class_index({f, static_cast<int>(k)})] = fam.coeffs[k];
      if (!t.irreducible()) fam.source = t.factors()[f].to_string() + "[" + std::to_string(f) + "]: " + fam.source;
      locus.families.push_back({std::move(coeffs), fam.condition, fam.source});
    }
  }
  return locus;
}

Decision is_singular(const SingularLocus& locus, const ParameterPoint& c) {
  if (c.type() != locus.type) throw ValidationError("parameter point type does not match the locus");
  const auto values = as_vector(c);
  for (std::size_t i = 0; i < locus.families.size(); ++i) {
    const auto& fam = locus.families[i];
    Rational s = 0;
    for (std::size_t k = 0; k < fam.coeffs.size(); ++k) s += fam.coeffs[k] * values[k];
    if (!is_integer(s)) continue;
    const Integer l = s.get_num();
    if (fam.condition.admits(l)) return {true, Witness{i, fam, l}};
  }
  return {};
}

Decision is_singular(const CartanType& t, const ParameterPoint& c) { return is_singular(djo_locus(t), c); }

LineSet lines_up_to_height(const SingularLocus& locus, int max_height) {
  if (max_height < 1) throw ValidationError("height bound must be at least 1");
  LineSet out;
  for (const auto& fam : locus.families) {
    std::int64_t g = 0;
    for (int a : fam.coeffs) g = std::gcd<std::int64_t>(g, a);
    if (g == 0) throw InvariantError("line family with zero coefficients");
    // The normalized rhs is l / gcd(g, l) >= l / g, so l <= H g suffices.
    for (std::int64_t l = 1; l <= max_height * g; ++l) {
      if (!fam.condition.admits(Integer(static_cast<long>(l)))) continue;
      auto line = CanonicalLine::normalized(std::vector<std::int64_t>(fam.coeffs.begin(), fam.coeffs.end()), l);
      if (line.height() <= max_height) out.insert(std::move(line));
    }
  }
  return out;
}

}  // namespace cherednik
