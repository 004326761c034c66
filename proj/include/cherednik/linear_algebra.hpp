#pragma once

#include <cassert>
#include <vector>

#include "cherednik/rational.hpp"

namespace cherednik {

/// Row-major dense matrix over an exact scalar.
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

using IntegerMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;

/// Scales each row by the lcm of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// Basis of the right kernel by fraction-free Gauss-Jordan elimination.
/// Pivots are the first nonzero entry in column order; each basis vector
/// is primitive with its first nonzero entry positive, one per free column
/// in increasing column order.
std::vector<std::vector<Integer>> integer_kernel(IntegerMatrix m);

}  // namespace cherednik
