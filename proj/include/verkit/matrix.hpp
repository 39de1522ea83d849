#pragma once

#include <cstddef>
#include <vector>

#include "verkit/integer.hpp"

namespace verkit {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  /// Rows and columns picked by the same index list.
  IntMatrix principal(const std::vector<std::size_t>& idx) const;
  /// result(a, b) = (*this)(perm[a], perm[b])
  IntMatrix permuted(const std::vector<std::size_t>& perm) const { return principal(perm); }

  bool symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
Integer determinant(const IntMatrix& m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 0..n-1.
std::vector<Integer> leading_minors(const IntMatrix& m);

bool positive_definite(const IntMatrix& m);

}  // namespace verkit
