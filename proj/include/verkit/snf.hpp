#pragma once

#include <vector>

#include "verkit/integer.hpp"
#include "verkit/matrix.hpp"

namespace verkit {

struct SmithForm {
  std::vector<Integer> factors;  // nonnegative, d_1 | d_2 | ...
  IntMatrix U, V;                // unimodular, U * M * V = diag(factors)
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Rewrites any list of diagonal entries into a divisibility chain with the
/// same cokernel.
std::vector<Integer> normalize_invariant_factors(std::vector<Integer> d);

/// U * M * V == diag(factors)
bool verify_certificate(const IntMatrix& m, const SmithForm& s);

}  // namespace verkit
