#include "cherednik/rational.hpp"

#include <cctype>

namespace cherednik {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw ValidationError("malformed rational '" + std::string(text) + "' (expected p/q)");
  Integer d(strip_plus(den));
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace cherednik
