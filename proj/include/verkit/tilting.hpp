#pragma once

#include <map>
#include <vector>

#include "verkit/charring.hpp"
#include "verkit/integer.hpp"

namespace verkit {

/// Direct sum of indecomposable tilting modules T_m, stored as m -> multiplicity.
struct TiltingSum {
  std::map<long, Integer> mults;

  void add(long m, const Integer& c);
  Integer at(long m) const;
  bool empty() const { return mults.empty(); }
  friend bool operator==(const TiltingSum& a, const TiltingSum& b) { return a.mults == b.mults; }
};

/// Character of T_m in characteristic p. Memoized; the reference stays
/// valid for the lifetime of the process. Thread-safe.
const SymChar& tilting_char(long p, long m);

/// Character of a TiltingSum.
SymChar character_of(long p, const TiltingSum& s);

/// Greedy from the top weight. Throws NegativeLeadingCoefficient when the
/// input is not an effective sum of tilting characters.
TiltingSum decompose_tilting(long p, const SymChar& a);

TiltingSum tensor_decompose(long p, long i, long j);

/// Drops every T_m with m >= p^n - 1.
TiltingSum truncate(long p, int n, const TiltingSum& s);

Integer hom_dim(long p, long i, long j);

/// d_m = dim Hom(1, V^{2m}) in the quotient by the n-th Steinberg module, m = 0..M.
std::vector<Integer> invariant_dims(long p, int n, int M);

/// Same numbers from the generating function u S_{N-2}(u) / S_{N-1}(u), N = p^n.
std::vector<Integer> series_fn(long p, int n, int M);

/// S_0 = 1, S_1 = u, S_m = u S_{m-1} - S_{m-2}; coefficients in ascending degree.
std::vector<Integer> chebyshev_S(long m);

}  // namespace verkit
