#include "verkit/error.hpp"
#include "verkit/integer.hpp"

namespace verkit {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime");
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NegativeLeadingCoefficient: return "NegativeLeadingCoefficient";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
  }
  return "Unknown";
}

}  // namespace verkit
