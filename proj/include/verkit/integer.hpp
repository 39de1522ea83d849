#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace verkit {

/// Arbitrary-precision signed integer used for every multiplicity, matrix
/// entry and ring coefficient in the library.
using Integer = mpz_class;

inline bool fits_int64(const Integer& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  // 62 bits is enough for any value accepted by fits_int64
  Integer hi = x >> 32;
  Integer lo = x - (hi << 32);
  return (static_cast<std::int64_t>(hi.get_si()) << 32) + static_cast<std::int64_t>(lo.get_ui());
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline Integer pow_int(long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

/// Integer power for small machine values; caller guarantees no overflow.
constexpr long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_prime(long p);

}  // namespace verkit
