#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "verkit/integer.hpp"

namespace verkit {

/// Class in the Grothendieck ring of Ver_{p^n}, coordinates over the simple
/// labels 0..p^{n-1}(p-1)-1.
struct GrElement {
  long p = 0;
  int n = 0;
  std::vector<Integer> coeffs;

  static GrElement zero(long p, int n);
  static GrElement basis(long p, int n, long i);

  Integer total() const;
  bool effective() const;
  std::string str() const;

  GrElement& operator+=(const GrElement& o);
  GrElement& operator-=(const GrElement& o);
  friend GrElement operator+(GrElement a, const GrElement& b) { return a += b; }
  friend GrElement operator-(GrElement a, const GrElement& b) { return a -= b; }
  friend GrElement operator*(const Integer& s, GrElement a);
  friend bool operator==(const GrElement& a, const GrElement& b) {
    return a.p == b.p && a.n == b.n && a.coeffs == b.coeffs;
  }
};

/// Sparse product of two simples: (label, multiplicity), ascending labels.
using Fusion = std::vector<std::pair<long, long>>;

/// Structure constants of Ver_{p^n}. Products are cached when the ring has
/// at most kCacheLimit simples. Thread-safe.
class FusionRing {
 public:
  static constexpr long kCacheLimit = 512;

  /// p = 2 is refused unless experimental_p2 is set.
  static std::shared_ptr<const FusionRing> get(long p, int n, bool experimental_p2 = false);

  FusionRing(long p, int n, std::shared_ptr<const FusionRing> lower);
  ~FusionRing();

  long p() const { return p_; }
  int n() const { return n_; }
  long size() const { return size_; }

  Fusion fuse(long a, long b) const;
  GrElement multiply(const GrElement& u, const GrElement& v) const;
  /// Multiplies every label by p: Gr(Ver_{p^{n-1}}) -> Gr(Ver_{p^n}).
  GrElement lift(const GrElement& lower_elem) const;

 private:
  Fusion compute(long a, long b) const;

  long p_;
  int n_;
  long size_;
  std::shared_ptr<const FusionRing> lower_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

/// Ver_p rule: |i-j| <= k <= min(i+j, 2(p-2)-i-j), k = i+j mod 2.
std::vector<long> base_fusion(long p, long i, long j);

GrElement fuse_simples(long p, int n, long a, long b, bool experimental_p2 = false);

/// [P_i] = sum_j c(s(j), s(i)) L_j.
GrElement projective_class(long p, int n, long i);

/// Class of the tilting object T_m in Ver_{p^n}, p odd, 0 <= m <= p^n-2.
GrElement tilting_class(long p, int n, long m);

struct RingHomReport {
  bool ok = true;
  long checked = 0;
  long i = -1, j = -1;  // counterexample
};

/// Compares truncated tensor decompositions against products of tilting
/// classes on random pairs; exhaustive when samples covers every pair.
RingHomReport check_ring_hom_fusion(long p, int n, long samples, std::uint64_t seed);

struct Folded {
  std::vector<long> simples;      // labels, ascending
  std::vector<long> projectives;  // simple labels i of P_i, ascending
  GrElement remainder;
  std::string str(const std::string& sep = " + ") const;
};

/// Splits an effective class into distinct simples plus projective covers,
/// maximizing the total length taken by projectives. Simple projectives stay
/// as L_i.
Folded fold_projectives(long p, int n, const GrElement& v);

}  // namespace verkit
