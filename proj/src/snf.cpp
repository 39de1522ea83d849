#include "verkit/snf.hpp"

#include <algorithm>
#include <utility>

#include "verkit/error.hpp"

namespace verkit {

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i -= q * row_j
void axpy_row(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (a(j, c) != 0) a(i, c) -= q * a(j, c);
}

void axpy_col(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a(r, j) != 0) a(r, i) -= q * a(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m, u = IntMatrix::identity(rows), v = IntMatrix::identity(cols);
  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // pivot: smallest nonzero absolute value in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0)) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        axpy_row(a, i, t, q);
        axpy_row(u, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        axpy_col(a, j, t, q);
        axpy_col(v, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the rest; otherwise fold the offending row in
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      axpy_row(a, t, bad, Integer(-1));
      axpy_row(u, t, bad, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }
  SmithForm s;
  for (std::size_t t = 0; t < lim; ++t) s.factors.push_back(a(t, t));
  s.U = std::move(u);
  s.V = std::move(v);
  return s;
}

std::vector<Integer> normalize_invariant_factors(std::vector<Integer> d) {
  for (auto& x : d) x = abs(x);
  // units carry no information; keep them in front
  std::vector<Integer> rest;
  std::size_t units = 0;
  for (auto& x : d) {
    if (x == 1) ++units;
    else rest.push_back(x);
  }
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
      if (rest[i] == 0 || rest[j] == 0) {
        // zero is divisible by everything: it belongs at the end
        if (rest[i] == 0) std::swap(rest[i], rest[j]);
        continue;
      }
      rest[i] = g;
      rest[j] = l;
    }
  std::vector<Integer> out(units, Integer(1));
  for (auto& x : rest)
    if (x == 1) out.push_back(x);
  for (auto& x : rest)
    if (x != 1) out.push_back(x);
  return out;
}

bool verify_certificate(const IntMatrix& m, const SmithForm& s) {
  if (s.U.rows() != m.rows() || s.V.cols() != m.cols()) return false;
  IntMatrix prod = s.U * m * s.V;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      const Integer want = i == j && i < s.factors.size() ? s.factors[i] : Integer(0);
      if (prod(i, j) != want) return false;
    }
  for (std::size_t i = 1; i < s.factors.size(); ++i) {
    if (s.factors[i - 1] == 0) {
      if (s.factors[i] != 0) return false;
    } else if (!mpz_divisible_p(s.factors[i].get_mpz_t(), s.factors[i - 1].get_mpz_t())) {
      return false;
    }
  }
  return true;
}

}  // namespace verkit
