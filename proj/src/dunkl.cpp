#include "cherednik/dunkl.hpp"

#include "cherednik/linear_algebra.hpp"

namespace cherednik {

DunklContext::DunklContext(const ParameterPoint& parameters) : params_(parameters), rs_(parameters.type()) {
  const int n = rs_.rank();
  for (std::size_t r : rs_.positive_indices()) {
    Reflection refl;
    refl.root = r;
    refl.c = params_[rs_.length_class(r)];
    refl.pairing = rs_.cartan_matrix() * rs_.roots()[r];
    refl.form = root_form(r);
    for (int i = 0; i < n; ++i) {
      auto image = RationalPolynomial::variable(n, i);
      image -= refl.form * Rational(rs_.coroots()[r](i));
      refl.substitution.push_back(std::move(image));
    }
    reflections_.push_back(std::move(refl));
  }
}

RationalPolynomial DunklContext::root_form(std::size_t root) const {
  const IntVector coeffs = rs_.cartan_matrix() * rs_.roots().at(root);
  std::vector<Rational> c(coeffs.data(), coeffs.data() + coeffs.size());
  return RationalPolynomial::linear_form(c);
}

RationalPolynomial DunklContext::reflect(std::size_t root, const RationalPolynomial& f) const {
  const int n = rs_.rank();
  const RationalPolynomial form = root_form(root);
  std::vector<RationalPolynomial> images;
  for (int i = 0; i < n; ++i) {
    auto image = RationalPolynomial::variable(n, i);
    image -= form * Rational(rs_.coroots().at(root)(i));
    images.push_back(std::move(image));
  }
  return f.substitute(images);
}

std::vector<RationalPolynomial> DunklContext::quotients(const RationalPolynomial& f) const {
  std::vector<RationalPolynomial> out;
  out.reserve(reflections_.size());
  for (const auto& refl : reflections_) {
    if (refl.c == 0) {
      out.emplace_back(rank());
      continue;
    }
    RationalPolynomial diff = f - f.substitute(refl.substitution);
    if (diff.is_zero()) {
      out.push_back(std::move(diff));
      continue;
    }
    auto q = divide_by_linear_form(std::move(diff), refl.form);
    if (!q) throw InvariantError("f - s.f is not divisible by the root form");
    out.push_back(std::move(*q));
  }
  return out;
}

RationalPolynomial DunklContext::apply(const IntVector& y, const RationalPolynomial& f) const {
  const int n = rank();
  if (y.size() != n || f.num_vars() != n) throw ValidationError("direction or polynomial has the wrong rank");
  RationalPolynomial out(n);
  for (int i = 0; i < n; ++i)
    if (y(i) != 0) out += f.derivative(i) * Rational(y(i));
  const auto qs = quotients(f);
  for (std::size_t k = 0; k < reflections_.size(); ++k) {
    const int pair = reflections_[k].pairing.dot(y);
    if (pair == 0 || qs[k].is_zero()) continue;
    out -= qs[k] * Rational(reflections_[k].c * pair);
  }
  return out;
}

std::vector<RationalPolynomial> DunklContext::apply_all(const RationalPolynomial& f) const {
  const int n = rank();
  const auto qs = quotients(f);
  std::vector<RationalPolynomial> out;
  for (int i = 0; i < n; ++i) {
    RationalPolynomial d = f.derivative(i);
    for (std::size_t k = 0; k < reflections_.size(); ++k) {
      const int pair = reflections_[k].pairing(i);
      if (pair == 0 || qs[k].is_zero()) continue;
      d -= qs[k] * Rational(reflections_[k].c * pair);
    }
    out.push_back(std::move(d));
  }
  return out;
}

RationalPolynomial dunkl_apply(const DunklContext& ctx, int direction, const RationalPolynomial& f) {
  if (direction < 0 || direction >= ctx.rank()) throw ValidationError("Dunkl direction out of range");
  return ctx.apply(IntVector::Unit(ctx.rank(), direction), f);
}

RationalPolynomial dunkl_apply(const DunklContext& ctx, const IntVector& y, const RationalPolynomial& f) {
  return ctx.apply(y, f);
}

std::vector<RationalPolynomial> singular_space(const DunklContext& ctx, int degree) {
  if (degree < 1) throw ValidationError("singular vectors are searched in positive degree");
  const int n = ctx.rank();
  const auto source = monomials_of_degree(n, degree);
  const auto target = monomials_of_degree(n, degree - 1);
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t k = 0; k < target.size(); ++k) row_of.emplace(target[k], k);

  RationalMatrix m(static_cast<std::size_t>(n) * target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto images = ctx.apply_all(RationalPolynomial::monomial(source[col], Rational(1)));
    for (int i = 0; i < n; ++i)
      for (const auto& [e, c] : images[i].terms()) m(i * target.size() + row_of.at(e), col) = c;
  }

  std::vector<RationalPolynomial> basis;
  for (const auto& v : integer_kernel(clear_denominators(m))) {
    RationalPolynomial p(n);
    for (std::size_t col = 0; col < v.size(); ++col) p.add_term(source[col], Rational(v[col]));
    basis.push_back(std::move(p));
  }
  return basis;
}

std::optional<SingularVector> find_singular_degree(const DunklContext& ctx, int max_degree) {
  if (max_degree < 1) throw ValidationError("degree bound must be at least 1");
  for (int d = 1; d <= max_degree; ++d) {
    auto basis = singular_space(ctx, d);
    if (!basis.empty()) return SingularVector{d, std::move(basis.front())};
  }
  return std::nullopt;
}

}  // namespace cherednik
