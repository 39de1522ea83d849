#include "verkit/tilting.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "verkit/error.hpp"

namespace verkit {

void TiltingSum::add(long m, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = mults.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) mults.erase(it);
  }
}

Integer TiltingSum::at(long m) const {
  auto it = mults.find(m);
  return it == mults.end() ? Integer(0) : it->second;
}

namespace {

struct TiltMemo {
  std::shared_mutex mu;
  std::map<std::pair<long, long>, std::unique_ptr<const SymChar>> table;
};

TiltMemo& memo() {
  static TiltMemo m;
  return m;
}

SymChar compute_tilting(long p, long m) {
  if (m <= p - 1) return weyl_char(m);
  if (m <= 2 * p - 2) return weyl_char(m) + weyl_char(2 * p - 2 - m);
  const long a = p - 1 + (m - (p - 1)) % p;
  const long b = (m - a) / p;
  return mul(tilting_char(p, a), frobenius_twist(tilting_char(p, b), p));
}

}  // namespace

const SymChar& tilting_char(long p, long m) {
  if (p < 2) fail(ErrorKind::InvalidArgument, "tilting_char: p must be a prime");
  if (m < 0) fail(ErrorKind::InvalidArgument, "tilting_char: negative highest weight");
  auto& mm = memo();
  const auto key = std::make_pair(p, m);
  {
    std::shared_lock lock(mm.mu);
    auto it = mm.table.find(key);
    if (it != mm.table.end()) return *it->second;
  }
  // computed outside the lock; concurrent fills produce identical values
  auto value = std::make_unique<const SymChar>(compute_tilting(p, m));
  std::unique_lock lock(mm.mu);
  auto [it, fresh] = mm.table.try_emplace(key, std::move(value));
  return *it->second;
}

SymChar character_of(long p, const TiltingSum& s) {
  SymChar r;
  for (const auto& [m, c] : s.mults) r += c * tilting_char(p, m);
  return r;
}

TiltingSum decompose_tilting(long p, const SymChar& a) {
  TiltingSum out;
  SymChar work = a;
  while (!work.empty()) {
    const long m = work.top();
    const Integer c = work.at(m);
    if (c < 0 || m < 0)
      fail(ErrorKind::NegativeLeadingCoefficient,
           "decompose_tilting: top coefficient " + c.get_str() + " at weight " + std::to_string(m));
    work -= c * tilting_char(p, m);
    out.add(m, c);
  }
  return out;
}

TiltingSum tensor_decompose(long p, long i, long j) {
  return decompose_tilting(p, mul(tilting_char(p, i), tilting_char(p, j)));
}

TiltingSum truncate(long p, int n, const TiltingSum& s) {
  const long bound = ipow(p, n) - 1;
  TiltingSum r;
  for (const auto& [m, c] : s.mults)
    if (m < bound) r.mults.emplace(m, c);
  return r;
}

Integer hom_dim(long p, long i, long j) { return inner(tilting_char(p, i), tilting_char(p, j)); }

std::vector<Integer> invariant_dims(long p, int n, int M) {
  if (M < 0) fail(ErrorKind::InvalidArgument, "invariant_dims: negative M");
  std::vector<long> socle_weights;
  for (int l = 0; l <= n - 1; ++l) socle_weights.push_back(2 * ipow(p, l) - 2);
  const SymChar& v = tilting_char(p, 1);
  TiltingSum cur;
  cur.add(0, 1);
  std::vector<Integer> d;
  for (int m = 0; m <= M; ++m) {
    Integer s = 0;
    for (long w : socle_weights) s += cur.at(w);
    d.push_back(s);
    for (int step = 0; step < 2; ++step)
      cur = truncate(p, n, decompose_tilting(p, mul(character_of(p, cur), v)));
  }
  return d;
}

std::vector<Integer> chebyshev_S(long m) {
  std::vector<Integer> prev{1}, cur{1};
  if (m == 0) return cur;
  cur = {0, 1};
  for (long k = 2; k <= m; ++k) {
    std::vector<Integer> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> series_fn(long p, int n, int M) {
  if (M < 0) fail(ErrorKind::InvalidArgument, "series_fn: negative M");
  const long N = ipow(p, n);
  // numerator u S_{N-2}, denominator S_{N-1}: both degree N-1, den monic
  std::vector<Integer> num(N), den = chebyshev_S(N - 1);
  auto s = chebyshev_S(N - 2);
  for (std::size_t i = 0; i < s.size(); ++i) num[i + 1] = s[i];
  const long deg = N - 1;
  auto num_at = [&](long k) { return k >= 0 && k <= deg ? num[k] : Integer(0); };
  auto den_at = [&](long k) { return k >= 0 && k <= deg ? den[k] : Integer(0); };
  // quotient c_k of u^{-k}
  const long terms = 2L * M + 1;
  std::vector<Integer> c(terms);
  for (long k = 0; k < terms; ++k) {
    Integer v = num_at(deg - k);
    for (long j = 1; j <= k; ++j) v -= c[k - j] * den_at(deg - j);
    c[k] = v;
  }
  std::vector<Integer> d;
  for (int m = 0; m <= M; ++m) d.push_back(c[2 * m]);
  return d;
}

}  // namespace verkit
