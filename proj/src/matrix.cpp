#include "verkit/matrix.hpp"

#include <utility>

#include "verkit/error.hpp"

namespace verkit {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != m.cols()) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::principal(const std::vector<std::size_t>& idx) const {
  IntMatrix r(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) r(a, b) = (*this)(idx[a], idx[b]);
  return r;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch in product");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch in sum");
  IntMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

namespace {

// Returns the pivots of Bareiss elimination; pivot k is the k-th leading
// minor when no swap was needed. sign tracks row swaps.
std::vector<Integer> bareiss(IntMatrix m, bool allow_swap, int& sign) {
  const std::size_t n = m.rows();
  std::vector<Integer> pivots;
  Integer prev = 1;
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      if (!allow_swap) {
        pivots.resize(n, Integer(0));
        return pivots;
      }
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) {
        pivots.resize(n, Integer(0));
        return pivots;
      }
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    pivots.push_back(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return pivots;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  int sign = 1;
  auto piv = bareiss(m, true, sign);
  return sign * piv.back();
}

std::vector<Integer> leading_minors(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::InvalidArgument, "leading minors of a non-square matrix");
  int sign = 1;
  return bareiss(m, false, sign);
}

bool positive_definite(const IntMatrix& m) {
  if (!m.symmetric()) return false;
  for (const auto& d : leading_minors(m))
    if (d <= 0) return false;
  return true;
}

}  // namespace verkit
