#include <doctest.h>

#include <random>

#include "cherednik/dunkl.hpp"

using namespace cherednik;

namespace {

CartanType T(const char* s) { return CartanType::parse(s); }

RationalPolynomial x_pow(int nvars, int var, int k) {
  Exponents e(nvars, 0);
  e[var] = k;
  return RationalPolynomial::monomial(e, Rational(1));
}

RationalPolynomial random_polynomial(std::mt19937& rng, int nvars, int max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_degree);
  RationalPolynomial p(nvars);
  for (int term = 0; term < 6; ++term) {
    Exponents e(nvars, 0);
    int left = deg(rng);
    for (int i = 0; i < nvars && left > 0; ++i) {
      const int k = std::uniform_int_distribution<int>(0, left)(rng);
      e[i] = k;
      left -= k;
    }
    p.add_term(e, Rational(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("A1 Dunkl operator on monomials") {
  const Rational c(2, 7);
  const DunklContext ctx(ParameterPoint::constant(T("A1"), c));
  CHECK(dunkl_apply(ctx, 0, x_pow(1, 0, 3)) == (Rational(3) - 2 * c) * x_pow(1, 0, 2));
  CHECK(dunkl_apply(ctx, 0, x_pow(1, 0, 2)) == Rational(2) * x_pow(1, 0, 1));
  CHECK(dunkl_apply(ctx, 0, RationalPolynomial::constant(1, 1)).is_zero());
}

TEST_CASE("A1 singular vectors") {
  const auto at = [](Rational c) { return DunklContext(ParameterPoint::constant(T("A1"), c)); };
  const auto half = find_singular_degree(at(Rational(1, 2)), 8);
  REQUIRE(half);
  CHECK(half->degree == 1);
  CHECK(half->witness == x_pow(1, 0, 1));
  const auto three_halves = find_singular_degree(at(Rational(3, 2)), 8);
  REQUIRE(three_halves);
  CHECK(three_halves->degree == 3);
  CHECK(three_halves->witness == x_pow(1, 0, 3));
  CHECK_FALSE(find_singular_degree(at(Rational(1, 4)), 8));
  CHECK_FALSE(find_singular_degree(at(Rational(-1, 2)), 8));
}

TEST_CASE("singular vectors of small rank-2 systems") {
  const auto a2 = find_singular_degree(DunklContext(ParameterPoint::constant(T("A2"), Rational(1, 3))), 6);
  REQUIRE(a2);
  CHECK(a2->degree == 1);
  const CartanType a1a1 = T("A1xA1");
  const DunklContext prod(ParameterPoint(a1a1, {{ClassId{0, 0}, Rational(1, 2)}, {ClassId{1, 0}, Rational(1, 4)}}));
  const auto p = find_singular_degree(prod, 6);
  REQUIRE(p);
  CHECK(p->degree == 1);
  CHECK(p->witness == x_pow(2, 0, 1));
  CHECK(singular_space(prod, 1).size() == 1);
  CHECK_FALSE(find_singular_degree(DunklContext(ParameterPoint::long_short(T("B2"), Rational(1, 5), Rational(1, 7))), 8));
  const auto b2 = find_singular_degree(DunklContext(ParameterPoint::long_short(T("B2"), Rational(1, 2), 0)), 4);
  REQUIRE(b2);
}

TEST_CASE("zero parameters give only constants") {
  for (const char* name : {"A2", "B2", "G2"}) {
    const DunklContext ctx(ParameterPoint::constant(T(name), 0));
    CHECK_FALSE(find_singular_degree(ctx, 5));
  }
}

TEST_CASE("Dunkl operators commute") {
  std::mt19937 rng(7);
  for (const char* name : {"A2", "B2", "G2", "A1xA1", "A3"}) {
    const CartanType t = T(name);
    const DunklContext ctx(ParameterPoint::constant(t, Rational(3, 7)));
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_polynomial(rng, t.rank(), 5);
      for (int i = 0; i < t.rank(); ++i)
        for (int j = i + 1; j < t.rank(); ++j)
          CHECK(dunkl_apply(ctx, i, dunkl_apply(ctx, j, f)) == dunkl_apply(ctx, j, dunkl_apply(ctx, i, f)));
    }
  }
}

TEST_CASE("Dunkl operators are equivariant") {
  std::mt19937 rng(11);
  for (const char* name : {"A2", "B2", "G2"}) {
    const CartanType t = T(name);
    const DunklContext ctx(ParameterPoint::long_short(t, Rational(2, 5), Rational(1, 3)));
    const auto& rs = ctx.root_system();
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = random_polynomial(rng, t.rank(), 4);
      for (std::size_t r : rs.positive_indices())
        for (int i = 0; i < t.rank(); ++i) {
          const IntVector y = IntVector::Unit(t.rank(), i);
          CHECK(ctx.reflect(r, ctx.apply(y, f)) == ctx.apply(rs.reflect(r, y), ctx.reflect(r, f)));
        }
    }
  }
}

TEST_CASE("reflections act as involutions matching the root form") {
  const DunklContext ctx(ParameterPoint::constant(T("G2"), 1));
  for (std::size_t r = 0; r < ctx.root_system().roots().size(); ++r) {
    const auto a = ctx.root_form(r);
    CHECK(ctx.reflect(r, a) == -a);
    const auto f = x_pow(2, 0, 2) + x_pow(2, 1, 3);
    CHECK(ctx.reflect(r, ctx.reflect(r, f)) == f);
  }
}

TEST_CASE("singular space arguments") {
  const DunklContext ctx(ParameterPoint::constant(T("A1"), Rational(1, 2)));
  CHECK_THROWS_AS(singular_space(ctx, 0), ValidationError);
  CHECK(singular_space(ctx, 2).empty());
  CHECK_THROWS_AS(dunkl_apply(ctx, 3, x_pow(1, 0, 1)), ValidationError);
}
