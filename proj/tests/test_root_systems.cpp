#include <doctest.h>

#include <algorithm>

#include "cherednik/root_system.hpp"
#include "oracles.hpp"

using namespace cherednik;

namespace {

std::vector<CartanType> all_irreducible(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(CartanType({{'A', n}}));
  for (int n = 2; n <= max_rank; ++n) out.push_back(CartanType({{'B', n}}));
  for (int n = 3; n <= max_rank; ++n) out.push_back(CartanType({{'C', n}}));
  for (int n = 4; n <= max_rank; ++n) out.push_back(CartanType({{'D', n}}));
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back(CartanType({{'E', n}}));
  if (max_rank >= 4) out.push_back(CartanType({{'F', 4}}));
  if (max_rank >= 2) out.push_back(CartanType({{'G', 2}}));
  return out;
}

CartanType T(const char* s) { return CartanType::parse(s); }

IntVector vec(std::initializer_list<int> v) {
  IntVector out(static_cast<int>(v.size()));
  int i = 0;
  for (int x : v) out(i++) = x;
  return out;
}

}  // namespace

TEST_CASE("root counts by reflection closure") {
  CHECK(RootSystem(T("A2")).roots().size() == 6);
  CHECK(RootSystem(T("B2")).roots().size() == 8);
  const RootSystem g2(T("G2"));
  REQUIRE(g2.roots().size() == 12);
  int longs = 0;
  for (std::size_t r = 0; r < 12; ++r) longs += g2.length_class(r).cls == 0;
  CHECK(longs == 6);
  const RootSystem a1(T("A1"));
  REQUIRE(a1.roots().size() == 2);
  CHECK(a1.roots()[0] == vec({-1}));
  CHECK(a1.roots()[1] == vec({1}));
  for (const auto& t : all_irreducible(8)) CHECK(RootSystem(t).roots().size() == root_count(t));
  CHECK(RootSystem(T("A1xG2")).roots().size() == 14);
}

TEST_CASE("root system invariants") {
  for (const auto& t : all_irreducible(8)) {
    CAPTURE(t.to_string());
    const RootSystem rs(t);
    const int n = rs.rank();
    std::set<int> lengths;
    for (std::size_t r = 0; r < rs.roots().size(); ++r) {
      const IntVector& a = rs.roots()[r];
      CHECK(rs.find(-a));
      CHECK_FALSE(rs.find(2 * a));
      CHECK(rs.coroots()[r].dot(rs.cartan_matrix() * a) == 2);
      lengths.insert(rs.squared_length(a));
      for (int i = 0; i < n; ++i) CHECK(rs.find(rs.reflect_root(static_cast<std::size_t>(*rs.find(IntVector::Unit(n, i))), a)));
    }
    CHECK(lengths.size() == (t.simply_laced() ? 1u : 2u));
    // Every positive root has nonnegative coordinates.
    for (std::size_t r : rs.positive_indices()) CHECK(rs.roots()[r].minCoeff() >= 0);
    CHECK(rs.num_positive() * 2 == rs.roots().size());
  }
}

TEST_CASE("roots are ordered by height with simple roots in index order") {
  const RootSystem b3(T("B3"));
  for (std::size_t i = 0; i + 1 < b3.roots().size(); ++i) CHECK(height(b3.roots()[i]) <= height(b3.roots()[i + 1]));
  const auto& pos = b3.positive_indices();
  for (int i = 0; i < 3; ++i) CHECK(b3.roots()[pos[i]] == IntVector::Unit(3, i));
}

TEST_CASE("arrow and symmetrizer conventions") {
  // B2: alpha_1 long, alpha_2 short.
  const RootSystem b2(T("B2"));
  CHECK(b2.symmetrizer() == vec({2, 1}));
  const auto dd = dynkin_diagram(b2.cartan_matrix());
  REQUIRE(dd.edges.size() == 1);
  CHECK(dd.edges[0] == DynkinEdge{0, 1, 2, true});
  CHECK(RootSystem(T("C3")).symmetrizer() == vec({1, 1, 2}));
  CHECK(RootSystem(T("G2")).symmetrizer() == vec({1, 3}));
  CHECK(RootSystem(T("F4")).symmetrizer() == vec({2, 2, 1, 1}));
  for (const auto& t : all_irreducible(8)) {
    const IntMatrix a = cartan_matrix(t);
    CHECK(dynkin_diagram(a).to_cartan_matrix() == a);
    const IntMatrix form = symmetrizer(a).asDiagonal() * a;
    CHECK(form == form.transpose());
  }
}

TEST_CASE("reflections") {
  const RootSystem a1(T("A1"));
  CHECK(a1.reflect(1, vec({1})) == vec({-1}));
  const RootSystem a2(T("A2"));
  const std::size_t alpha1 = *a2.find(vec({1, 0}));
  CHECK(a2.reflect(alpha1, vec({0, 1})) == vec({1, 1}));
  // x with <x, alpha_1> = 0 is fixed: x = alpha_1^vee + 2 alpha_2^vee.
  CHECK(a2.reflect(alpha1, vec({1, 2})) == vec({1, 2}));
  const RootSystem g2(T("G2"));
  for (std::size_t r = 0; r < g2.roots().size(); ++r)
    for (const auto& x : {vec({1, 0}), vec({0, 1}), vec({3, -2})}) CHECK(g2.reflect(r, g2.reflect(r, x)) == x);
  CHECK_THROWS_AS(a2.reflect(99, vec({0, 1})), ValidationError);
}

TEST_CASE("Weyl group orders agree with group generation up to rank 4") {
  CHECK(weyl_order(T("A2")) == 6);
  CHECK(weyl_order(T("G2")) == 12);
  CHECK(weyl_order(T("A1")) == 2);
  CHECK(weyl_order(T("E8")) == 696729600);
  for (const auto& t : all_irreducible(4)) {
    CAPTURE(t.to_string());
    const RootSystem rs(t);
    const auto group = oracle::weyl_group(rs);
    CHECK(Integer(static_cast<unsigned long>(group.size())) == weyl_order(t));
    std::set<oracle::Permutation> reflections;
    for (std::size_t r : rs.positive_indices()) {
      const auto s = oracle::reflection_permutation(rs, r);
      CHECK(group.count(s));
      reflections.insert(s);
    }
    CHECK(reflections.size() == rs.num_positive());
  }
}

TEST_CASE("degrees agree with the length generating function up to rank 4") {
  CHECK(degrees(T("G2")) == std::vector<int>{2, 6});
  CHECK(degrees(T("D4")) == std::vector<int>{2, 4, 6, 4});
  CHECK(degrees(T("A1")) == std::vector<int>{2});
  for (const auto& t : all_irreducible(4)) {
    CAPTURE(t.to_string());
    const RootSystem rs(t);
    CHECK(UnivariatePolynomial<Integer>(oracle::length_generating_function(rs)) == poincare_polynomial(t));
  }
}

TEST_CASE("degree sums and products") {
  for (const auto& t : all_irreducible(8)) {
    const auto ds = degrees(t);
    int sum = 0;
    for (int d : ds) sum += d - 1;
    CHECK(sum * 2 == root_count(t));
    CHECK(*std::min_element(ds.begin(), ds.end()) == 2);
    CHECK(poincare_polynomial(t).evaluate(1) == weyl_order(t));
  }
}

TEST_CASE("Poincare polynomials") {
  const auto U = [](std::vector<Integer> c) { return UnivariatePolynomial<Integer>(std::move(c)); };
  CHECK(poincare_polynomial(T("A1")) == U({1, 1}));
  CHECK(poincare_polynomial(T("A2")) == U({1, 2, 2, 1}));
  CHECK(poincare_polynomial(T("B2")) == U({1, 1}) * U({1, 1, 1, 1}));
}

TEST_CASE("extended diagrams") {
  const auto g2 = extended_diagram(T("G2"));
  CHECK(g2.num_nodes == 3);
  // chain: affine - alpha_2 (long) = alpha_1 (short), triple bond
  CHECK(g2.marks == std::vector<int>{1, 3, 2});
  REQUIRE(g2.edges.size() == 2);
  CHECK(g2.edges[0] == DynkinEdge{0, 2, 1, false});
  CHECK(g2.edges[1] == DynkinEdge{2, 1, 3, true});

  const auto a1 = extended_diagram(T("A1"));
  CHECK(a1.marks == std::vector<int>{1, 1});
  REQUIRE(a1.edges.size() == 1);
  CHECK(a1.edges[0] == DynkinEdge{0, 1, 4, false});
  CHECK(a1.to_cartan_matrix() == (IntMatrix(2, 2) << 2, -2, -2, 2).finished());

  const auto f4 = extended_diagram(T("F4"));
  CHECK(f4.marks == std::vector<int>{1, 2, 3, 4, 2});
  REQUIRE(f4.edges.size() == 4);
  CHECK(f4.edges[0] == DynkinEdge{0, 1, 1, false});
  CHECK(f4.edges[2] == DynkinEdge{2, 3, 2, true});

  CHECK_THROWS_AS(extended_diagram(T("A1xA1")), ValidationError);
}

TEST_CASE("extended diagram marks give the long highest root") {
  for (const auto& t : all_irreducible(8)) {
    CAPTURE(t.to_string());
    const RootSystem rs(t);
    const auto ext = extended_diagram(t);
    IntVector theta(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) theta(i) = ext.marks[i + 1];
    const auto idx = rs.find(theta);
    REQUIRE(idx);
    CHECK(rs.length_class(*idx).cls == 0);
    for (const auto& r : rs.roots()) CHECK(height(r) <= height(theta));
    CHECK(ext.to_cartan_matrix() == cartan_matrix_of(ext.node_roots, rs.form()));
  }
}

TEST_CASE("diagram identification") {
  CHECK(identify_diagram(2 * IntMatrix::Identity(2, 2)) == T("A1xA1"));
  for (const auto& t : all_irreducible(8)) CHECK(identify_diagram(cartan_matrix(t)) == t);
  CHECK(identify_diagram(cartan_matrix(T("A3xB2xG2"))) == T("A3xB2xG2"));
  // C2 in Bourbaki form is identified as B2.
  CHECK(identify_diagram(cartan_matrix(Factor{'C', 2})) == T("B2"));

  const RootSystem f4(T("F4"));
  const auto ext = extended_diagram(T("F4"));
  const IntMatrix full = cartan_matrix_of(ext.node_roots, f4.form());
  const auto remove = [&](int node) {
    std::vector<IntVector> kept;
    for (int i = 0; i < 5; ++i)
      if (i != node) kept.push_back(ext.node_roots[i]);
    return identify_diagram(cartan_matrix_of(kept, f4.form()));
  };
  CHECK(remove(4) == T("B4"));
  CHECK(remove(3) == T("A3xA1"));
  CHECK(remove(2) == T("A2xA2"));
  CHECK(remove(1) == T("A1xC3"));
  CHECK(remove(0) == T("F4"));
  CHECK_THROWS_AS(identify_diagram(full), ValidationError);
}

TEST_CASE("non-finite and malformed matrices are rejected") {
  for (const char* t : {"A1", "A3", "B3", "C4", "D5", "E6", "E8", "F4", "G2"}) {
    const CartanType type = T(t);
    const RootSystem rs(type);
    const auto ext = extended_diagram(type);
    CHECK_THROWS_AS(identify_diagram(cartan_matrix_of(ext.node_roots, rs.form())), ValidationError);
  }
  CHECK_THROWS_AS(identify_diagram((IntMatrix(2, 2) << 2, -1, 0, 2).finished()), ValidationError);
  CHECK_THROWS_AS(identify_diagram((IntMatrix(2, 2) << 1, 0, 0, 2).finished()), ValidationError);
  CHECK_THROWS_AS(identify_diagram(IntMatrix(2, 3)), ValidationError);
  // Double bond in the middle of a 5-chain (F5) and a branched double bond.
  IntMatrix f5 = cartan_matrix(Factor{'A', 5});
  f5(2, 1) = -2;
  CHECK_THROWS_AS(identify_diagram(f5), ValidationError);
  IntMatrix e9 = cartan_matrix(Factor{'E', 8});
  IntMatrix e9big = 2 * IntMatrix::Identity(9, 9);
  e9big.topLeftCorner(8, 8) = e9;
  e9big(7, 8) = e9big(8, 7) = -1;
  CHECK_THROWS_AS(identify_diagram(e9big), ValidationError);
}
