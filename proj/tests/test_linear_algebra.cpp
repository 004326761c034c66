#include <doctest.h>

#include <random>

#include "cherednik/linear_algebra.hpp"
#include "oracles.hpp"

using namespace cherednik;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

bool in_kernel(const IntegerMatrix& m, const std::vector<Integer>& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kernel of small matrices") {
  const auto m = from_rows({{1, 2, 3}, {2, 4, 6}});
  const auto k = integer_kernel(m);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == std::vector<Integer>{2, -1, 0});
  CHECK(k[1] == std::vector<Integer>{3, 0, -1});
  CHECK(integer_kernel(from_rows({{1, 0}, {0, 1}})).empty());
  CHECK(integer_kernel(from_rows({{0, 0}})).size() == 2);
  // 2x - 3y = 0 -> primitive (3, 2)
  const auto k2 = integer_kernel(from_rows({{4, -6}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == std::vector<Integer>{3, 2});
}

TEST_CASE("clearing denominators keeps rows proportional") {
  RationalMatrix m(1, 3);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(2, 3);
  m(0, 2) = Rational(-1);
  const auto z = clear_denominators(m);
  CHECK(z(0, 0) == 3);
  CHECK(z(0, 1) == 4);
  CHECK(z(0, 2) == -6);
}

TEST_CASE("property: kernel vectors are annihilated and span the nullity") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    IntegerMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = (trial % 3 == 0 && r > 0) ? m(r - 1, c) * 2 : Integer(entry(rng));
    const auto basis = integer_kernel(m);
    CHECK(basis.size() == cols - oracle::rational_rank(m));
    for (const auto& v : basis) CHECK(in_kernel(m, v));
    // Independence: stacked basis has full rank.
    if (!basis.empty()) {
      IntegerMatrix b(basis.size(), cols);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (int c = 0; c < cols; ++c) b(i, c) = basis[i][c];
      CHECK(oracle::rational_rank(b) == basis.size());
    }
  }
}
