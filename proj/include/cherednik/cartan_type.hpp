#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

/// One irreducible factor, e.g. {'B', 4}.
struct Factor {
  char letter = 'A';
  int rank = 1;

  auto operator<=>(const Factor&) const = default;
  bool simply_laced() const { return letter == 'A' || letter == 'D' || letter == 'E'; }
  std::string to_string() const;
};

/// Length class of a root: the factor it lives in, and 0 (long) or 1 (short).
/// Simply laced factors only have class 0.
struct ClassId {
  int factor = 0;
  int cls = 0;

  auto operator<=>(const ClassId&) const = default;
};

/// A possibly reducible Cartan type in canonical form.
///
/// Aliases are normalized on construction: B1, C1 -> A1; C2 -> B2;
/// D2 -> A1xA1; D3 -> A3. Factors are sorted by (letter, rank); the sort is
/// stable so callers may pre-order equal factors.
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<Factor> factors);

  /// Parses "B4", "A3xA1", "A1*A1". Throws ValidationError.
  static CartanType parse(std::string_view text);

  const std::vector<Factor>& factors() const { return factors_; }
  int rank() const;
  bool irreducible() const { return factors_.size() == 1; }
  bool simply_laced() const;
  bool empty() const { return factors_.empty(); }

  /// Length classes in canonical order: factor by factor, long before short.
  std::vector<ClassId> classes() const;
  /// Index of `id` in classes(); throws InvariantError when absent.
  std::size_t class_index(ClassId id) const;

  std::string to_string() const;

  auto operator<=>(const CartanType&) const = default;

 private:
  std::vector<Factor> factors_;
};

}  // namespace cherednik
