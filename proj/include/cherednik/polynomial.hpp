#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cherednik {

/// Dense univariate polynomial, coefficient i multiplies t^i. Always trimmed.
template <class Coeff>
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UnivariatePolynomial one() { return UnivariatePolynomial({Coeff(1)}); }
  /// 1 + t + ... + t^(d-1)
  static UnivariatePolynomial geometric(int d) { return UnivariatePolynomial(std::vector<Coeff>(d, Coeff(1))); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coefficients() const { return c_; }
  Coeff operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : Coeff(0); }

  Coeff evaluate(const Coeff& t) const {
    Coeff y(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) y = y * t + *it;
    return y;
  }

  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePolynomial(std::move(out));
  }

  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    std::vector<Coeff> out(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return UnivariatePolynomial(std::move(out));
  }

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  /// Long division. Each step needs the leading coefficient of `divisor` to
  /// divide exactly, so over the integers pass a monic (or unit-led) divisor.
  std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Coeff> rem = c_;
    const int dd = divisor.degree();
    const Coeff& lead = divisor.c_.back();
    std::vector<Coeff> quot(std::max(0, degree() - dd + 1), Coeff(0));
    for (int k = degree(); k >= dd; --k) {
      if (rem[k] == 0) continue;
      Coeff q = rem[k] / lead;
      if (q * lead != rem[k]) throw std::domain_error("inexact leading-coefficient division");
      quot[k - dd] = q;
      for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= q * divisor.c_[i];
    }
    return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// All exponent vectors of total degree d in n variables, in grlex order.
inline std::vector<Exponents> monomials_of_degree(int nvars, int d) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  // Recursive fill: first variable takes the largest share first.
  auto fill = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  fill(fill, 0, d);
  return out;
}

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients
/// are never stored.
template <class Coeff>
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Coeff, GrlexGreater>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Coeff& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static Polynomial variable(int nvars, int i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(std::move(e), Coeff(1));
  }
  static Polynomial monomial(Exponents e, const Coeff& c) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }
  /// sum_i coeffs[i] * X_i
  template <class Range>
  static Polynomial linear_form(const Range& coeffs) {
    Polynomial p(static_cast<int>(std::size(coeffs)));
    int i = 0;
    for (const auto& c : coeffs) {
      Exponents e(p.nvars_, 0);
      e[i++] = 1;
      p.add_term(std::move(e), Coeff(c));
    }
    return p;
  }

  int num_vars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  bool is_homogeneous() const {
    return terms_.empty() || total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
  }

  Coeff coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Exponents e, const Coeff& c) {
    assert(static_cast<int>(e.size()) == nvars_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Coeff(-1); }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(int var) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      out.add_term(std::move(d), c * Coeff(e[var]));
    }
    return out;
  }

  Polynomial homogeneous_component(int d) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  /// Replaces X_i by images[i] everywhere.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    assert(static_cast<int>(images.size()) == nvars_);
    const int target_vars = images.empty() ? 0 : images.front().num_vars();
    std::vector<std::vector<Polynomial>> powers(nvars_);
    auto power = [&](int var, int k) -> const Polynomial& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(constant(target_vars, Coeff(1)));
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[var]);
      return cache[k];
    };
    Polynomial out(target_vars);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(target_vars, c);
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) term = term * power(i, e[i]);
      out += term;
    }
    return out;
  }

 private:
  int nvars_ = 0;
  TermMap terms_;
};

/// Exact division of f by a nonzero linear form. Returns nullopt when the
/// remainder does not vanish.
template <class Coeff>
std::optional<Polynomial<Coeff>> divide_by_linear_form(Polynomial<Coeff> f, const Polynomial<Coeff>& linear) {
  const int n = f.num_vars();
  int pivot = -1;
  Coeff pivot_coeff(0);
  for (const auto& [e, c] : linear.terms()) {
    if (total_degree(e) != 1) throw std::invalid_argument("divisor is not a linear form");
    const int var = static_cast<int>(std::find(e.begin(), e.end(), 1) - e.begin());
    if (pivot < 0 || var < pivot) {
      pivot = var;
      pivot_coeff = c;
    }
  }
  if (pivot < 0) throw std::invalid_argument("division by the zero linear form");

  Polynomial<Coeff> quotient(n);
  while (!f.is_zero()) {
    // Reduce a term of maximal degree in the pivot variable.
    const auto lead = std::max_element(f.terms().begin(), f.terms().end(), [&](const auto& a, const auto& b) {
      return a.first[pivot] < b.first[pivot];
    });
    if (lead->first[pivot] == 0) return std::nullopt;
    Exponents e = lead->first;
    --e[pivot];
    const auto q = Polynomial<Coeff>::monomial(std::move(e), lead->second / pivot_coeff);
    quotient += q;
    f -= q * linear;
  }
  return quotient;
}

}  // namespace cherednik
