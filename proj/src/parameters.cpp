#include "cherednik/parameters.hpp"

namespace cherednik {

ParameterPoint::ParameterPoint(const CartanType& type, std::map<ClassId, Rational> values)
    : type_(type), values_(std::move(values)) {
  const auto classes = type_.classes();
  if (values_.size() != classes.size())
    throw ValidationError("parameter point must assign exactly one value per length class of " + type_.to_string());
  for (const auto& id : classes)
    if (!values_.count(id)) throw ValidationError("parameter point misses a length class of " + type_.to_string());
}

ParameterPoint ParameterPoint::constant(const CartanType& type, const Rational& c) {
  std::map<ClassId, Rational> v;
  for (const auto& id : type.classes()) v[id] = c;
  return ParameterPoint(type, std::move(v));
}

ParameterPoint ParameterPoint::long_short(const CartanType& type, const Rational& k_long, const Rational& k_short) {
  if (!type.irreducible()) throw ValidationError("long/short parameters need an irreducible type");
  std::map<ClassId, Rational> v{{{0, 0}, k_long}};
  if (!type.simply_laced()) v[{0, 1}] = k_short;
  return ParameterPoint(type, std::move(v));
}

const Rational& ParameterPoint::operator[](ClassId id) const {
  const auto it = values_.find(id);
  if (it == values_.end()) throw InvariantError("parameter point has no value for the requested class");
  return it->second;
}

bool ParameterPoint::is_constant() const {
  for (const auto& [id, v] : values_)
    if (v != values_.begin()->second) return false;
  return true;
}

std::string ParameterPoint::to_string() const {
  std::string s = "(";
  bool first = true;
  for (const auto& [id, v] : values_) {
    if (!first) s += ", ";
    first = false;
    s += cherednik::to_string(v);
  }
  return s + ")";
}

}  // namespace cherednik
