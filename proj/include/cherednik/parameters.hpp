#pragma once

#include <map>
#include <string>

#include "cherednik/cartan_type.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

/// The multiplicity function c: one exact value per length class.
class ParameterPoint {
 public:
  ParameterPoint() = default;
  ParameterPoint(const CartanType& type, std::map<ClassId, Rational> values);

  /// Same value on every class.
  static ParameterPoint constant(const CartanType& type, const Rational& c);
  /// Irreducible type: k_long on class 0, k_short on class 1 (ignored when simply laced).
  static ParameterPoint long_short(const CartanType& type, const Rational& k_long, const Rational& k_short);

  const CartanType& type() const { return type_; }
  const Rational& operator[](ClassId id) const;
  const std::map<ClassId, Rational>& values() const { return values_; }
  bool is_constant() const;
  std::string to_string() const;

 private:
  CartanType type_;
  std::map<ClassId, Rational> values_;
};

}  // namespace cherednik
