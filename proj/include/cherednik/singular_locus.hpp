#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cherednik/parameters.hpp"

namespace cherednik {

/// Admissible right-hand sides l >= 1 of a line family.
struct RhsCondition {
  enum class Kind { any, not_divisible, residues, coprime };
  Kind kind = Kind::any;
  /// Modulus for not_divisible and residues; the fixed j for coprime.
  int modulus = 1;
  std::vector<int> residues;

  static RhsCondition any() { return {}; }
  static RhsCondition not_divisible_by(int m) { return {Kind::not_divisible, m, {}}; }
  static RhsCondition residues_mod(int m, std::vector<int> r) { return {Kind::residues, m, std::move(r)}; }
  static RhsCondition coprime_to(int j) { return {Kind::coprime, j, {}}; }

  bool admits(const Integer& l) const;
  bool operator==(const RhsCondition&) const = default;
};

/// sum_i coeffs[i] * k_i = l, l subject to `condition`, coeffs indexed by
/// CartanType::classes().
struct LineFamily {
  std::vector<int> coeffs;
  RhsCondition condition;
  std::string source;

  bool operator==(const LineFamily&) const = default;
};

struct SingularLocus {
  CartanType type;
  std::vector<LineFamily> families;
};

/// A concrete affine hyperplane sum coeffs[i] k_i = rhs, normalized so
/// gcd(coeffs, rhs) = 1 and the first nonzero coefficient is positive.
struct CanonicalLine {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;

  static CanonicalLine normalized(std::vector<std::int64_t> coeffs, std::int64_t rhs);
  std::int64_t height() const;
  bool contains(const std::vector<Rational>& point) const;
  std::string to_string(const CartanType& type) const;
  auto operator<=>(const CanonicalLine&) const = default;
};

using LineSet = std::set<CanonicalLine>;

struct Witness {
  std::size_t family_index = 0;
  LineFamily family;
  Integer l;
};

struct Decision {
  bool member = false;
  std::optional<Witness> witness;
};

/// Parameter values in CartanType::classes() order.
std::vector<Rational> as_vector(const ParameterPoint& c);

/// Rational singular locus as line families (product types: union of factors).
SingularLocus djo_locus(const CartanType& t);
/// Families of one irreducible factor, with coefficients on that factor's classes only.
std::vector<LineFamily> factor_families(const Factor& f);

/// First family (in table order) that the point satisfies.
Decision is_singular(const SingularLocus& locus, const ParameterPoint& c);
Decision is_singular(const CartanType& t, const ParameterPoint& c);

/// Concrete lines of the locus whose normalized coefficients and rhs are at
/// most H in absolute value. Throws ValidationError for H < 1.
LineSet lines_up_to_height(const SingularLocus& locus, int max_height);

/// Human-readable names of the classes of t, e.g. "k_long", "k_short", "c".
std::vector<std::string> class_labels(const CartanType& t);

}  // namespace cherednik
