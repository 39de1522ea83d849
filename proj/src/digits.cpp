#include "verkit/digits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "verkit/charring.hpp"
#include "verkit/error.hpp"
#include "verkit/tilting.hpp"

namespace verkit {

namespace {

void check_pn(long p, int n) {
  require_prime(p);
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be at least 1");
}

void check_simple(long p, int n, long i) {
  if (i < 0 || i >= num_simples(p, n))
    fail(ErrorKind::OutOfRange, "simple label " + std::to_string(i) + " out of range for p=" +
                                    std::to_string(p) + ", n=" + std::to_string(n));
}

}  // namespace

std::vector<int> to_digits(long x, long p, int n) {
  std::vector<int> d(n);
  for (int k = n - 1; k >= 0; --k) {
    d[k] = static_cast<int>(x % p);
    x /= p;
  }
  return d;
}

long from_digits(const std::vector<int>& d, long p) {
  long x = 0;
  for (int v : d) x = x * p + v;
  return x;
}

long num_simples(long p, int n) { return ipow(p, n - 1) * (p - 1); }
long proj_begin(long p, int n) { return ipow(p, n - 1) - 1; }
long proj_end(long p, int n) { return ipow(p, n) - 2; }

std::set<long> descendants(long a, long p, int n) {
  if (a < ipow(p, n - 1) || a > ipow(p, n) - 1)
    fail(ErrorKind::OutOfRange, "descendants: " + std::to_string(a) + " does not have exactly " +
                                    std::to_string(n) + " base-" + std::to_string(p) + " digits");
  auto d = to_digits(a, p, n);
  std::set<long> cur{d[0] * ipow(p, n - 1)};
  for (int k = 1; k < n; ++k) {
    const long step = d[k] * ipow(p, n - 1 - k);
    std::set<long> next;
    for (long v : cur) {
      next.insert(v + step);
      next.insert(v - step);
    }
    cur = std::move(next);
  }
  return cur;
}

IntMatrix decomposition_matrix(long p, int n) {
  check_pn(p, n);
  const long b = proj_begin(p, n);
  IntMatrix d(num_simples(p, n), ipow(p, n) - 1);
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (long j : descendants(b + static_cast<long>(r) + 1, p, n)) d(r, j - 1) = 1;
  return d;
}

std::map<long, Integer> extended_decomposition_row(long p, int n, long i) {
  check_pn(p, n);
  if (i < 0 || i > proj_end(p, n)) fail(ErrorKind::OutOfRange, "extended_decomposition_row: index out of range");
  return weyl_expand(tilting_char(p, i));
}

IntMatrix decomposition_matrix_from_characters(long p, int n) {
  check_pn(p, n);
  const long b = proj_begin(p, n);
  IntMatrix d(num_simples(p, n), ipow(p, n) - 1);
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (const auto& [j, c] : extended_decomposition_row(p, n, b + static_cast<long>(r))) {
      if (j >= static_cast<long>(d.cols())) fail(ErrorKind::OutOfRange, "Weyl factor above the projective range");
      d(r, j) = c;
    }
  return d;
}

IntMatrix cartan_descendant(long p, int n) {
  check_pn(p, n);
  const long b = proj_begin(p, n);
  const std::size_t sz = num_simples(p, n);
  std::vector<std::set<long>> desc(sz);
  for (std::size_t r = 0; r < sz; ++r) desc[r] = descendants(b + static_cast<long>(r) + 1, p, n);
  IntMatrix c(sz, sz);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j) {
      long common = 0;
      auto x = desc[i].begin();
      auto y = desc[j].begin();
      while (x != desc[i].end() && y != desc[j].end()) {
        if (*x < *y) ++x;
        else if (*y < *x) ++y;
        else { ++common; ++x; ++y; }
      }
      c(i, j) = common;
      c(j, i) = common;
    }
  return c;
}

IntMatrix cartan_dddt(long p, int n) {
  auto d = decomposition_matrix_from_characters(p, n);
  return d * d.transpose();
}

IntMatrix cartan_hom(long p, int n) {
  check_pn(p, n);
  const long b = proj_begin(p, n);
  const std::size_t sz = num_simples(p, n);
  IntMatrix c(sz, sz);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = i; j < sz; ++j) {
      c(i, j) = hom_dim(p, b + static_cast<long>(i), b + static_cast<long>(j));
      c(j, i) = c(i, j);
    }
  return c;
}

namespace {

IntMatrix kron_odd(long p, int n) {
  auto delta = [](bool b) { return b ? 1L : 0L; };
  std::vector<std::vector<long>> D(p, std::vector<long>(p)), S = D, A2 = D, B = D, Z0(p - 1, std::vector<long>(p - 1));
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < p; ++j) {
      D[i][j] = i == j ? (i == 0 ? 1 : 2) : 0;
      S[i][j] = delta(i + j == p);
      A2[i][j] = 2 * delta(std::labs(i - j) == 1);
      B[i][j] = delta(i + j == p - 1) + delta(i + j == p + 1);
      if (i > 0 && j > 0) Z0[i - 1][j - 1] = delta(std::labs(i - j) == 1);
    }
  const auto md = IntMatrix::from_rows(D), ms = IntMatrix::from_rows(S), ma = IntMatrix::from_rows(A2),
             mb = IntMatrix::from_rows(B);
  IntMatrix x = IntMatrix::identity(p - 1), z = IntMatrix::from_rows(Z0);
  for (int m = 1; m < n; ++m) {
    IntMatrix nx = kron(md, x) + kron(ms, z);
    IntMatrix nz = kron(ma, x) + kron(mb, z);
    x = std::move(nx);
    z = std::move(nz);
  }
  return x;
}

// p = 2: C_m splits as C^+_m (+) C_{m-1}.
IntMatrix kron_two(int n) {
  if (n == 1) return IntMatrix::identity(1);
  const auto a = IntMatrix::from_rows({{2, 1}, {1, 0}}), b = IntMatrix::from_rows({{0, 0}, {0, 2}}),
             c = IntMatrix::from_rows({{1, 0}, {0, 0}}), e = IntMatrix::from_rows({{0, 0}, {0, 1}});
  IntMatrix plus = IntMatrix::from_rows({{2}}), full = IntMatrix::identity(1);
  for (int m = 1; m < n; ++m) {
    IntMatrix np = kron(a, plus) + kron(b, full);
    IntMatrix nf = kron(c, plus) + kron(e, full);
    plus = std::move(np);
    full = std::move(nf);
  }
  return full;
}

std::size_t kpos_odd(long a, long p, int n) {
  if (n == 1) return static_cast<std::size_t>(a - 1);
  return static_cast<std::size_t>((a % p) * ipow(p, n - 2) * (p - 1)) + kpos_odd(a / p, p, n - 1);
}

std::size_t kpos_two_plus(int m, long a);

std::size_t kpos_two(int m, long a) {
  if (m == 1) return 0;
  if (a % 2) return kpos_two_plus(m, a);
  return static_cast<std::size_t>(ipow(2, m - 2)) + kpos_two(m - 1, a / 2);
}

std::size_t kpos_two_plus(int m, long a) {
  if (m == 2) return 0;
  const long h = (a - 1) / 2;
  if (h % 2) return kpos_two_plus(m - 1, h);
  return static_cast<std::size_t>(ipow(2, m - 3)) + kpos_two(m - 2, h / 2);
}

}  // namespace

IntMatrix cartan_kronecker_raw(long p, int n) {
  check_pn(p, n);
  return p == 2 ? kron_two(n) : kron_odd(p, n);
}

std::size_t kronecker_position(long p, int n, long i) {
  if (i < proj_begin(p, n) || i > proj_end(p, n)) fail(ErrorKind::OutOfRange, "kronecker_position: not a projective index");
  return p == 2 ? kpos_two(n, i + 1) : kpos_odd(i + 1, p, n);
}

IntMatrix cartan_kronecker(long p, int n) {
  auto raw = cartan_kronecker_raw(p, n);
  const long b = proj_begin(p, n);
  std::vector<std::size_t> perm(raw.rows());
  for (std::size_t r = 0; r < perm.size(); ++r) perm[r] = kronecker_position(p, n, b + static_cast<long>(r));
  return raw.permuted(perm);
}

std::tuple<int, int, int> block_key(long p, int n, long i) {
  if (i < proj_begin(p, n) || i > proj_end(p, n)) fail(ErrorKind::OutOfRange, "block_key: not a projective index");
  long a = i + 1;
  int zeros = 0;
  while (a % p == 0) {
    a /= p;
    ++zeros;
  }
  const long last = a % p;
  return {static_cast<int>(i % 2), zeros, static_cast<int>(std::min(last, p - last))};
}

std::vector<Block> block_partition(long p, int n) {
  check_pn(p, n);
  std::map<std::tuple<int, int, int>, Block> by_key;
  for (long i = proj_begin(p, n); i <= proj_end(p, n); ++i) {
    auto key = block_key(p, n, i);
    auto& blk = by_key[key];
    blk.members.push_back(i);
    const int zeros = std::get<1>(key);
    blk.level = zeros == n - 1 ? 0 : n - 1 - zeros;
  }
  std::vector<Block> out;
  for (auto& [k, b] : by_key) out.push_back(std::move(b));
  std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) {
    return x.level != y.level ? x.level < y.level : x.members.front() < y.members.front();
  });
  return out;
}

ProjIndex steinberg_label(long p, int n, SimpleLabel i) {
  check_pn(p, n);
  check_simple(p, n, i.v);
  auto d = to_digits(i.v, p, n);
  for (int k = 1; k < n; ++k) d[k] = static_cast<int>(p - 1 - d[k]);
  return {proj_begin(p, n) + from_digits(d, p)};
}

SimpleLabel simple_of_projective(long p, int n, ProjIndex s) {
  check_pn(p, n);
  if (s.v < proj_begin(p, n) || s.v > proj_end(p, n))
    fail(ErrorKind::OutOfRange, "projective index " + std::to_string(s.v) + " out of range");
  auto d = to_digits(s.v - proj_begin(p, n), p, n);
  for (int k = 1; k < n; ++k) d[k] = static_cast<int>(p - 1 - d[k]);
  return {from_digits(d, p)};
}

int ext1(long p, int n, long a, long b) {
  check_pn(p, n);
  if (p == 2) fail(ErrorKind::UnsupportedPrime, "ext1 is only implemented for odd p");
  check_simple(p, n, a);
  check_simple(p, n, b);
  auto x = to_digits(a, p, n), y = to_digits(b, p, n);
  std::vector<int> diff;
  for (int k = 0; k < n; ++k)
    if (x[k] != y[k]) diff.push_back(k);
  if (diff.size() != 2 || diff[1] != diff[0] + 1) return 0;
  const int k = diff[0];
  return std::abs(x[k] - y[k]) == 1 && x[k + 1] + y[k + 1] == p - 2 ? 1 : 0;
}

int ext1_recursive(long p, int n, long a, long b) {
  if (p == 2) fail(ErrorKind::UnsupportedPrime, "ext1 is only implemented for odd p");
  if (n <= 1) return 0;
  const long m = a % p, r = b % p;
  if (m == r) return ext1_recursive(p, n - 1, a / p, b / p);
  if (m + r != p - 2) return 0;
  const long ah = a / p, bh = b / p;
  return ah / p == bh / p && std::labs(ah % p - bh % p) == 1 ? 1 : 0;
}

std::optional<std::pair<long, long>> frobenius_on_simple(long p, int n, long i) {
  check_pn(p, n);
  if (p == 2) fail(ErrorKind::UnsupportedPrime, "frobenius_on_simple is not defined at digit level for p=2");
  if (n < 2) fail(ErrorKind::InvalidArgument, "frobenius_on_simple needs n >= 2");
  check_simple(p, n, i);
  const long top = ipow(p, n - 1);
  const long r = i / top, b = i % top;
  if (b >= top - ipow(p, n - 2)) return std::nullopt;
  if (r % 2 == 0) return std::make_pair(b, r);
  auto d = to_digits(b, p, n - 1);
  d[0] = static_cast<int>(p - 2 - d[0]);
  return std::make_pair(from_digits(d, p), p - 2 - r);
}

}  // namespace verkit
