#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cherednik {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed user input (type strings, parameter strings, bounds).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "p/q", "p" or "-p/q". The result is canonical (lowest terms, q > 0).
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// p/q in lowest terms; mpq_class(p, q) alone does not canonicalize.
inline Rational ratio(const Integer& p, const Integer& q) {
  if (q == 0) throw ValidationError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace cherednik
