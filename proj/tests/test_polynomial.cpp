#include <doctest.h>

#include <random>

#include "cherednik/polynomial.hpp"
#include "cherednik/rational.hpp"

using namespace cherednik;
using P = Polynomial<Rational>;
using U = UnivariatePolynomial<Integer>;

TEST_CASE("univariate products and exact division") {
  const U a2 = U::geometric(2) * U::geometric(3);
  CHECK(a2 == U({1, 2, 2, 1}));
  CHECK(a2.evaluate(1) == 6);
  const auto [q, r] = a2.divmod(U::geometric(2));
  CHECK(q == U::geometric(3));
  CHECK(r.is_zero());
  const auto [q2, r2] = U::geometric(3).divmod(U::geometric(2));
  CHECK(q2 == U({0, 1}));
  CHECK(r2 == U({1}));
}

TEST_CASE("monomials of degree d come in grlex order") {
  const auto m = monomials_of_degree(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == Exponents{2, 0, 0});
  CHECK(m.back() == Exponents{0, 0, 2});
  for (std::size_t i = 0; i + 1 < m.size(); ++i) CHECK(GrlexGreater{}(m[i], m[i + 1]));
  CHECK(monomials_of_degree(2, 12).size() == 13);
  CHECK(monomials_of_degree(3, 12).size() == 91);
  CHECK(monomials_of_degree(4, 0).size() == 1);
}

TEST_CASE("arithmetic drops zero coefficients") {
  const P x = P::variable(2, 0), y = P::variable(2, 1);
  const P f = (x + y) * (x - y);
  CHECK(f.size() == 2);
  CHECK(f.coefficient({2, 0}) == 1);
  CHECK(f.coefficient({0, 2}) == -1);
  CHECK((f - f).is_zero());
  CHECK(f.derivative(0) == x * Rational(2));
  CHECK(f.homogeneous_component(2) == f);
  CHECK(f.homogeneous_component(1).is_zero());
}

TEST_CASE("substitution") {
  const P x = P::variable(2, 0), y = P::variable(2, 1);
  const P f = x * x * y;
  // x -> -x, y -> x + y
  const P g = f.substitute({-x, x + y});
  CHECK(g == x * x * x + x * x * y);
}

TEST_CASE("division by a linear form") {
  const P x = P::variable(2, 0), y = P::variable(2, 1);
  const P lin = x * Rational(2) - y;
  const P q = x * x + y * Rational(3, 2);
  const auto back = divide_by_linear_form(q * lin, lin);
  REQUIRE(back);
  CHECK(*back == q);
  CHECK_FALSE(divide_by_linear_form(x * y + P::constant(2, Rational(1)), lin));
  CHECK_FALSE(divide_by_linear_form(y * y, x));
}

TEST_CASE("property: (f * L) / L == f") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    P f(3), lin(3);
    for (int k = 0; k < 5; ++k) f.add_term({expo(rng), expo(rng), expo(rng)}, ratio(coef(rng), 3));
    for (int i = 0; i < 3; ++i) {
      Exponents e(3, 0);
      e[i] = 1;
      lin.add_term(e, Rational(coef(rng)));
    }
    if (lin.is_zero()) continue;
    const auto q = divide_by_linear_form(f * lin, lin);
    REQUIRE(q);
    CHECK(*q == f);
  }
}
