#pragma once

// Test-only brute-force oracles. Nothing here calls into the code paths the
// tests check beyond RootSystem's root list.

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "cherednik/linear_algebra.hpp"
#include "cherednik/root_system.hpp"

namespace oracle {

using cherednik::Integer;
using cherednik::IntVector;
using cherednik::Rational;
using cherednik::RootSystem;

using Permutation = std::vector<int>;

/// Permutation of root indices induced by the reflection in `root`,
/// computed straight from s(b) = b - <a^vee, b> a with A(i,j) = <a_i^vee, a_j>.
inline Permutation reflection_permutation(const RootSystem& rs, std::size_t root) {
  const auto& a = rs.roots()[root];
  // a^vee = 2 a / (a, a) in coroot coordinates: (a^vee)_j = 2 a_j d_j / (a, a).
  const int len = a.dot(rs.form() * a);
  Permutation p(rs.roots().size());
  for (std::size_t r = 0; r < rs.roots().size(); ++r) {
    const auto& b = rs.roots()[r];
    const int pairing = 2 * a.dot(rs.form() * b) / len;
    const IntVector image = b - pairing * a;
    int found = -1;
    for (std::size_t k = 0; k < rs.roots().size(); ++k)
      if (rs.roots()[k] == image) found = static_cast<int>(k);
    p[r] = found;
  }
  return p;
}

inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

/// The Weyl group as permutations of the roots, generated by simple reflections.
inline std::set<Permutation> weyl_group(const RootSystem& rs) {
  std::vector<Permutation> gens;
  for (int i = 0; i < rs.rank(); ++i)
    for (std::size_t k = 0; k < rs.roots().size(); ++k)
      if (rs.roots()[k] == IntVector::Unit(rs.rank(), i)) gens.push_back(reflection_permutation(rs, k));
  Permutation id(rs.roots().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::set<Permutation> group{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto gw = compose(g, w);
      if (group.insert(gw).second) queue.push_back(std::move(gw));
    }
  }
  return group;
}

/// sum over w of t^{l(w)}, l(w) = number of positive roots sent to negative roots.
inline std::vector<Integer> length_generating_function(const RootSystem& rs) {
  std::vector<Integer> coeffs(rs.num_positive() + 1, Integer(0));
  for (const auto& w : weyl_group(rs)) {
    int len = 0;
    for (std::size_t r : rs.positive_indices())
      if (rs.roots()[w[r]].sum() < 0) ++len;
    coeffs[len] += 1;
  }
  return coeffs;
}

/// Rank over Q by plain rational Gaussian elimination.
inline std::size_t rational_rank(const cherednik::IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational(m(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
