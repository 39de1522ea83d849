#pragma once

#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "verkit/integer.hpp"

namespace verkit {

/// Z[x]/Phi_{2p^n}(x), x standing for q = exp(i pi / p^n). Immutable after
/// construction; obtain shared instances through get().
class CycloContext {
 public:
  static std::shared_ptr<const CycloContext> get(long p, int n);

  CycloContext(long p, int n);

  long p() const { return p_; }
  int n() const { return n_; }
  /// 2 p^n, the order of q.
  long order() const { return order_; }
  std::size_t degree() const { return degree_; }
  /// Modulus coefficients, ascending, monic of length degree()+1.
  const std::vector<Integer>& modulus() const { return modulus_; }

  /// Reduces a polynomial of any length to degree() coefficients.
  std::vector<Integer> reduce(std::vector<Integer> a) const;

 private:
  long p_;
  int n_;
  long order_;
  std::size_t degree_;
  std::vector<Integer> modulus_;
  std::vector<std::pair<std::size_t, int>> tail_;  // x^deg = sum sign * x^k
};

struct Approx {
  std::complex<long double> value;
  long double error;  // absolute bound on |value - exact|
};

class CycloInt {
 public:
  CycloInt() = default;
  explicit CycloInt(std::shared_ptr<const CycloContext> ctx);
  CycloInt(std::shared_ptr<const CycloContext> ctx, const Integer& c);
  CycloInt(std::shared_ptr<const CycloContext> ctx, std::vector<Integer> coeffs);

  /// q^k for any integer k.
  static CycloInt monomial(std::shared_ptr<const CycloContext> ctx, long k);

  const CycloContext& context() const { return *ctx_; }
  const std::shared_ptr<const CycloContext>& context_ptr() const { return ctx_; }
  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const;

  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  friend CycloInt operator*(const Integer& s, CycloInt a);
  friend bool operator==(const CycloInt& a, const CycloInt& b);

  /// Image under q -> q^{-1}.
  CycloInt conjugate() const;

  Approx numeric() const;
  std::string str() const;

 private:
  void same_ring(const CycloInt& o) const;
  std::shared_ptr<const CycloContext> ctx_;
  std::vector<Integer> c_;
};

/// [m]_{q^{p^t}} = sum_{k<m} q^{p^t (m-1-2k)}
CycloInt qint(const std::shared_ptr<const CycloContext>& ctx, long m, int t = 0);

CycloInt fpdim_simple(long p, int n, long i);
CycloInt fpdim_projective(long p, int n, long i_simple);

struct CdCheck {
  bool ok = true;
  long failing_row = -1;  // projective index of the first failing row
};

/// Sum_j C_{ij} FPdim(L_j) == FPdim(P_i) for every projective row, exactly.
CdCheck verify_cd_eq_p(long p, int n);

/// Classical dimension prod (i_k + 1) and its residue mod p.
std::pair<Integer, long> dim_simple(long p, int n, long i);

/// Integer polynomial, ascending coefficients, trailing zeros trimmed.
struct IntPoly {
  std::vector<Integer> c;
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  long degree() const { return static_cast<long>(c.size()) - 1; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
  std::string str() const;
};

/// Q_{n,p} = S_{p^n - 1}; Q_{0,p} = 1.
IntPoly chebyshev_Q(long p, int n);
/// Q = Q+ - Q- with disjoint supports and nonnegative coefficients.
std::pair<IntPoly, IntPoly> split(const IntPoly& q);

CycloInt evaluate(const IntPoly& f, const CycloInt& x);

/// Sum FPdim(L_i) FPdim(P_i) evaluated numerically.
Approx fpdim_category(long p, int n);
long double fpdim_category_closed(long p, int n);

}  // namespace verkit
