#pragma once

#include <map>
#include <string>

#include "verkit/integer.hpp"

namespace verkit {

/// Finitely supported symmetric Laurent polynomial in one variable x; the
/// key is the exponent (weight), zero coefficients are never stored.
class SymChar {
 public:
  using Coeffs = std::map<long, Integer>;

  SymChar() = default;
  explicit SymChar(Coeffs c);

  const Coeffs& coeffs() const { return c_; }
  Integer at(long w) const;
  bool empty() const { return c_.empty(); }
  /// Largest weight with a nonzero coefficient. Requires !empty().
  long top() const { return c_.rbegin()->first; }
  bool is_symmetric() const;

  void add(long w, const Integer& v);
  SymChar& operator+=(const SymChar& o);
  SymChar& operator-=(const SymChar& o);

  friend SymChar operator+(SymChar a, const SymChar& b) { return a += b; }
  friend SymChar operator-(SymChar a, const SymChar& b) { return a -= b; }
  friend SymChar operator*(const Integer& s, const SymChar& a);
  friend bool operator==(const SymChar& a, const SymChar& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  Coeffs c_;
};

/// Character of the Weyl module W_m: weights m, m-2, ..., -m.
SymChar weyl_char(long m);

SymChar mul(const SymChar& a, const SymChar& b);

/// x -> x^p
SymChar frobenius_twist(const SymChar& a, long p);

/// Coefficients d with a = sum_m d[m] * weyl_char(m); zero entries dropped.
std::map<long, Integer> weyl_expand(const SymChar& a);

/// Sum over m of products of Weyl multiplicities.
Integer inner(const SymChar& a, const SymChar& b);

Integer dim_at_one(const SymChar& a);

}  // namespace verkit
