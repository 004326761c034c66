#include "cherednik/linear_algebra.hpp"

namespace cherednik {

namespace {

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return;
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  for (auto& x : v) x /= g;
}

void reduce_row(IntegerMatrix& m, std::size_t r) {
  Integer g = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) g = gcd(g, m(r, c));
  if (g > 1)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) /= g;
}

}  // namespace

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

std::vector<std::vector<Integer>> integer_kernel(IntegerMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_col;  // pivot column of row k
  std::vector<bool> is_pivot(cols, false);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, rank);
    if (m(rank, c) < 0)
      for (std::size_t k = 0; k < cols; ++k) m(rank, k) = -m(rank, k);
    reduce_row(m, rank);
    const Integer piv = m(rank, c);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m(r, c) == 0) continue;
      const Integer factor = m(r, c);
      for (std::size_t k = 0; k < cols; ++k) m(r, k) = piv * m(r, k) - factor * m(rank, k);
      reduce_row(m, r);
    }
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++rank;
  }

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Integer scale = 1;
    for (std::size_t k = 0; k < rank; ++k)
      if (m(k, f) != 0) scale = lcm(scale, m(k, pivot_col[k]));
    std::vector<Integer> v(cols, Integer(0));
    v[f] = scale;
    for (std::size_t k = 0; k < rank; ++k)
      if (m(k, f) != 0) v[pivot_col[k]] = -m(k, f) * (scale / m(k, pivot_col[k]));
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cherednik
