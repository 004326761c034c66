#pragma once

#include <optional>
#include <vector>

#include "cherednik/parameters.hpp"
#include "cherednik/polynomial.hpp"
#include "cherednik/root_system.hpp"

namespace cherednik {

using RationalPolynomial = Polynomial<Rational>;

/// Rational Dunkl operators for a root system at fixed parameters.
///
/// Polynomials live on h with variables X_i dual to the simple coroots, so
/// a root alpha is the linear form sum_i (A alpha)_i X_i and the reflection
/// s_alpha substitutes X_i -> X_i - (alpha^vee)_i alpha. For y in h,
///
///   D_y f = d_y f - sum_{alpha > 0} c_alpha <alpha, y> (f - s_alpha f) / alpha.
///
/// Under this sign convention c = 1/2 is singular for A1.
class DunklContext {
 public:
  explicit DunklContext(const ParameterPoint& parameters);

  const RootSystem& root_system() const { return rs_; }
  const ParameterPoint& parameters() const { return params_; }
  int rank() const { return rs_.rank(); }

  /// s_alpha . f for the root with index `root` in root_system().roots().
  RationalPolynomial reflect(std::size_t root, const RationalPolynomial& f) const;
  /// The root as a linear form on h.
  RationalPolynomial root_form(std::size_t root) const;

  /// D_y f for y in the simple-coroot basis. Throws InvariantError if a
  /// difference quotient is not exactly divisible.
  RationalPolynomial apply(const IntVector& y, const RationalPolynomial& f) const;
  /// D_{alpha_i^vee} f for every i.
  std::vector<RationalPolynomial> apply_all(const RationalPolynomial& f) const;

 private:
  struct Reflection {
    std::size_t root;
    Rational c;
    IntVector pairing;  // <alpha, alpha_i^vee> = (A alpha)_i
    RationalPolynomial form;
    std::vector<RationalPolynomial> substitution;
  };
  std::vector<RationalPolynomial> quotients(const RationalPolynomial& f) const;

  ParameterPoint params_;
  RootSystem rs_;
  std::vector<Reflection> reflections_;
};

RationalPolynomial dunkl_apply(const DunklContext& ctx, int direction, const RationalPolynomial& f);
RationalPolynomial dunkl_apply(const DunklContext& ctx, const IntVector& y, const RationalPolynomial& f);

/// Basis of homogeneous degree-d polynomials killed by every Dunkl
/// operator; each basis element has primitive integer coefficients.
std::vector<RationalPolynomial> singular_space(const DunklContext& ctx, int degree);

struct SingularVector {
  int degree = 0;
  RationalPolynomial witness;
};

/// Smallest degree 1 <= d <= max_degree with a singular vector. An empty
/// result only means "none up to max_degree".
std::optional<SingularVector> find_singular_degree(const DunklContext& ctx, int max_degree);

}  // namespace cherednik
