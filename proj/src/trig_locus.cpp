#include "cherednik/trig_locus.hpp"

#include "cherednik/root_system.hpp"

namespace cherednik {

SingularLocus pullback_locus(const SubsystemEmbedding& e) {
  const SingularLocus sub = djo_locus(e.sub_type);
  const auto sub_classes = e.sub_type.classes();
  SingularLocus out{e.parent, {}};
  const std::size_t parent_classes = e.parent.classes().size();
  for (const auto& fam : sub.families) {
    std::vector<int> coeffs(parent_classes, 0);
    for (std::size_t k = 0; k < sub_classes.size(); ++k)
      coeffs[e.parent.class_index({0, e.class_map.at(sub_classes[k])})] += fam.coeffs[k];
    out.families.push_back({std::move(coeffs), fam.condition, e.sub_type.to_string() + ": " + fam.source});
  }
  return out;
}

TrigDecision is_reducible_trig(const CartanType& t, const ParameterPoint& c) {
  const auto strata = point_strata(t);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const auto decision = is_singular(strata[i].sub_type, restrict_parameters(strata[i], c));
    if (decision.member) return {true, TrigWitness{i, strata[i], *decision.witness}};
  }
  return {};
}

LineSet trig_lines_up_to_height(const CartanType& t, int max_height) {
  LineSet out;
  for (const auto& e : point_strata(t)) out.merge(lines_up_to_height(pullback_locus(e), max_height));
  return out;
}

std::vector<std::vector<Rational>> sample_points(const CanonicalLine& line, int count) {
  static constexpr int primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167};
  const std::size_t n = line.coeffs.size();
  std::size_t pivot = 0;
  while (line.coeffs[pivot] == 0) ++pivot;
  std::vector<std::vector<Rational>> out;
  for (int s = 0; s < count; ++s) {
    std::vector<Rational> point(n);
    Rational rest = Rational(Integer(static_cast<long>(line.rhs)));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      const int p = primes[(s + 3 * i) % std::size(primes)];
      point[i] = Rational(s * 7 + 3 + static_cast<int>(i), p);
      point[i].canonicalize();
      rest -= Rational(Integer(static_cast<long>(line.coeffs[i]))) * point[i];
    }
    point[pivot] = rest / Rational(Integer(static_cast<long>(line.coeffs[pivot])));
    out.push_back(std::move(point));
  }
  return out;
}

std::vector<AdditionalLine> additional_lines(const CartanType& t, int max_height) {
  const LineSet rational = lines_up_to_height(djo_locus(t), max_height);
  std::vector<AdditionalLine> out;
  for (const auto& line : trig_lines_up_to_height(t, max_height)) {
    if (rational.count(line)) continue;
    bool ok = true;
    const auto classes = t.classes();
    for (const auto& sample : sample_points(line)) {
      std::map<ClassId, Rational> values;
      for (std::size_t i = 0; i < classes.size(); ++i) values[classes[i]] = sample[i];
      const ParameterPoint c(t, std::move(values));
      if (is_singular(t, c).member || !is_reducible_trig(t, c).reducible) {
        ok = false;
        break;
      }
    }
    out.push_back({line, ok});
  }
  return out;
}

LineSet line_set(const std::vector<AdditionalLine>& lines) {
  LineSet out;
  for (const auto& l : lines) out.insert(l.line);
  return out;
}

bool constant_reducibility(const CartanType& t, const Rational& c) {
  if (!t.irreducible() || !t.simply_laced())
    throw ValidationError("constant rule applies to irreducible simply laced types; use the two-parameter decision for " +
                          t.to_string());
  for (int d : degrees(t)) {
    const Rational j = c * d;
    if (is_integer(j) && j >= 1 && j.get_num() % d != 0) return true;
  }
  return false;
}

}  // namespace cherednik
