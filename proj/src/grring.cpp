#include "verkit/grring.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <sstream>

#include "verkit/digits.hpp"
#include "verkit/error.hpp"
#include "verkit/tilting.hpp"

namespace verkit {

GrElement GrElement::zero(long p, int n) {
  return GrElement{p, n, std::vector<Integer>(static_cast<std::size_t>(num_simples(p, n)))};
}

GrElement GrElement::basis(long p, int n, long i) {
  auto e = zero(p, n);
  if (i < 0 || i >= static_cast<long>(e.coeffs.size())) fail(ErrorKind::OutOfRange, "GrElement: label out of range");
  e.coeffs[i] = 1;
  return e;
}

Integer GrElement::total() const {
  Integer s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

bool GrElement::effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c >= 0; });
}

std::string GrElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (coeffs[i] != 1) os << coeffs[i];
    os << 'L' << i;
  }
  if (first) os << '0';
  return os.str();
}

GrElement& GrElement::operator+=(const GrElement& o) {
  if (o.coeffs.size() != coeffs.size()) fail(ErrorKind::InvalidArgument, "GrElement: size mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

GrElement& GrElement::operator-=(const GrElement& o) {
  if (o.coeffs.size() != coeffs.size()) fail(ErrorKind::InvalidArgument, "GrElement: size mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

GrElement operator*(const Integer& s, GrElement a) {
  for (auto& c : a.coeffs) c *= s;
  return a;
}

std::vector<long> base_fusion(long p, long i, long j) {
  std::vector<long> r;
  const long hi = std::min(i + j, 2 * (p - 2) - i - j);
  for (long k = std::labs(i - j); k <= hi; k += 2) r.push_back(k);
  return r;
}

struct FusionRing::Cache {
  std::shared_mutex mu;
  std::vector<std::optional<Fusion>> table;
};

std::shared_ptr<const FusionRing> FusionRing::get(long p, int n, bool experimental_p2) {
  require_prime(p);
  if (n < 1) fail(ErrorKind::InvalidArgument, "FusionRing: n must be at least 1");
  if (p == 2 && !experimental_p2)
    fail(ErrorKind::UnsupportedPrime, "fusion for p=2 is experimental; enable it explicitly");
  std::shared_ptr<const FusionRing> lower;
  if (n > 1) lower = get(p, n - 1, experimental_p2);
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const FusionRing>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, n}];
  if (!slot) slot = std::make_shared<const FusionRing>(p, n, lower);
  return slot;
}

FusionRing::FusionRing(long p, int n, std::shared_ptr<const FusionRing> lower)
    : p_(p), n_(n), size_(num_simples(p, n)), lower_(std::move(lower)), cache_(std::make_unique<Cache>()) {
  if (size_ <= kCacheLimit) cache_->table.resize(static_cast<std::size_t>(size_ * size_));
}

FusionRing::~FusionRing() = default;

Fusion FusionRing::fuse(long a, long b) const {
  if (a < 0 || a >= size_ || b < 0 || b >= size_)
    fail(ErrorKind::OutOfRange, "fuse: label out of range (" + std::to_string(a) + ", " + std::to_string(b) +
                                    "), ring has " + std::to_string(size_) + " simples");
  if (a > b) std::swap(a, b);
  if (cache_->table.empty()) return compute(a, b);
  const std::size_t key = static_cast<std::size_t>(a * size_ + b);
  {
    std::shared_lock lock(cache_->mu);
    if (cache_->table[key]) return *cache_->table[key];
  }
  Fusion f = compute(a, b);
  std::unique_lock lock(cache_->mu);
  if (!cache_->table[key]) cache_->table[key] = f;
  return f;
}

Fusion FusionRing::compute(long a, long b) const {
  std::map<long, long> acc;
  if (n_ == 1) {
    for (long k : base_fusion(p_, a, b)) acc[k] += 1;
    return Fusion(acc.begin(), acc.end());
  }
  const long p = p_;
  const long ah = a / p, m = a % p, bh = b / p, r = b % p;
  const Fusion inner = lower_->fuse(ah, bh);
  auto add_lift = [&](long k, long coef, const Fusion& f) {
    for (auto [c, x] : f) acc[c * p + k] += coef * x;
  };
  const long par = (m + r) % 2;
  if (m + r < p) {
    for (long k = std::labs(m - r); k <= m + r; k += 2) add_lift(k, 1, inner);
  } else {
    for (long k = std::labs(m - r); k <= 2 * (p - 2) - m - r; k += 2) add_lift(k, 1, inner);
    for (long k = 2 * (p - 1) - m - r; k <= p - 1; ++k)
      if (k % 2 == par) add_lift(k, k == p - 1 ? 1 : 2, inner);
    // V (x) inner inside Ver_{p^{n-1}}, V = L_1 there; V is zero in Ver_2
    std::map<long, long> vi;
    if (lower_->size() > 1)
      for (auto [c, x] : inner)
        for (auto [d, y] : lower_->fuse(1, c)) vi[d] += x * y;
    const Fusion vf(vi.begin(), vi.end());
    for (long k = p; k <= m + r; ++k)
      if (k % 2 == par) add_lift(k - p, 1, vf);
  }
  Fusion out;
  for (auto [c, x] : acc)
    if (x != 0) out.emplace_back(c, x);
  return out;
}

GrElement FusionRing::multiply(const GrElement& u, const GrElement& v) const {
  if (u.coeffs.size() != static_cast<std::size_t>(size_) || v.coeffs.size() != static_cast<std::size_t>(size_))
    fail(ErrorKind::InvalidArgument, "multiply: element from a different ring");
  auto r = GrElement::zero(p_, n_);
  for (long a = 0; a < size_; ++a) {
    if (u.coeffs[a] == 0) continue;
    for (long b = 0; b < size_; ++b) {
      if (v.coeffs[b] == 0) continue;
      const Integer ab = u.coeffs[a] * v.coeffs[b];
      for (auto [c, x] : fuse(a, b)) r.coeffs[c] += ab * x;
    }
  }
  return r;
}

GrElement FusionRing::lift(const GrElement& lower_elem) const {
  auto r = GrElement::zero(p_, n_);
  for (std::size_t c = 0; c < lower_elem.coeffs.size(); ++c) {
    const long t = static_cast<long>(c) * p_;
    if (t >= size_) fail(ErrorKind::OutOfRange, "lift: element does not come from the level below");
    r.coeffs[t] += lower_elem.coeffs[c];
  }
  return r;
}

GrElement fuse_simples(long p, int n, long a, long b, bool experimental_p2) {
  auto ring = FusionRing::get(p, n, experimental_p2);
  auto r = GrElement::zero(p, n);
  for (auto [c, x] : ring->fuse(a, b)) r.coeffs[c] = x;
  return r;
}

namespace {

std::shared_ptr<const std::vector<GrElement>> projective_classes(long p, int n) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const std::vector<GrElement>>> registry;
  {
    std::lock_guard lock(mu);
    auto it = registry.find({p, n});
    if (it != registry.end()) return it->second;
  }
  const long ns = num_simples(p, n);
  std::vector<std::set<long>> desc(ns);
  for (long j = 0; j < ns; ++j) desc[j] = descendants(steinberg_label(p, n, SimpleLabel{j}).v + 1, p, n);
  auto classes = std::make_shared<std::vector<GrElement>>();
  for (long i = 0; i < ns; ++i) {
    auto e = GrElement::zero(p, n);
    for (long j = 0; j < ns; ++j) {
      long common = 0;
      for (long x : desc[i]) common += desc[j].count(x);
      e.coeffs[j] = common;
    }
    classes->push_back(std::move(e));
  }
  std::lock_guard lock(mu);
  auto [it, fresh] = registry.try_emplace({p, n}, std::move(classes));
  return it->second;
}

}  // namespace

GrElement projective_class(long p, int n, long i) {
  require_prime(p);
  if (i < 0 || i >= num_simples(p, n)) fail(ErrorKind::OutOfRange, "projective_class: label out of range");
  return (*projective_classes(p, n))[i];
}

GrElement tilting_class(long p, int n, long m) {
  require_prime(p);
  if (p == 2) fail(ErrorKind::UnsupportedPrime, "tilting_class is only implemented for odd p");
  if (m < 0 || m > ipow(p, n) - 2) fail(ErrorKind::OutOfRange, "tilting_class: index out of range");
  if (m <= p - 1) return GrElement::basis(p, n, m);
  if (m <= 2 * p - 2) {
    auto e = GrElement::basis(p, n, m);
    e.coeffs[2 * p - 2 - m] += 2;
    return e;
  }
  const long a = p - 1 + (m - (p - 1)) % p;
  const long b = (m - a) / p;
  auto ring = FusionRing::get(p, n);
  return ring->multiply(tilting_class(p, n, a), ring->lift(tilting_class(p, n - 1, b)));
}

RingHomReport check_ring_hom_fusion(long p, int n, long samples, std::uint64_t seed) {
  require_prime(p);
  if (p == 2) fail(ErrorKind::UnsupportedPrime, "check_ring_hom_fusion is only defined for odd p");
  const long range = ipow(p, n) - 1;
  auto ring = FusionRing::get(p, n);
  std::vector<GrElement> cls;
  for (long m = 0; m < range; ++m) cls.push_back(tilting_class(p, n, m));
  auto check = [&](long i, long j) {
    auto lhs = GrElement::zero(p, n);
    for (const auto& [k, c] : truncate(p, n, tensor_decompose(p, i, j)).mults) lhs += c * cls[k];
    return lhs == ring->multiply(cls[i], cls[j]);
  };
  RingHomReport rep;
  if (samples >= range * (range + 1) / 2) {
    for (long i = 0; i < range; ++i)
      for (long j = i; j < range; ++j) {
        ++rep.checked;
        if (!check(i, j)) return {false, rep.checked, i, j};
      }
    return rep;
  }
  std::mt19937_64 rng(seed);
  for (long s = 0; s < samples; ++s) {
    const long i = static_cast<long>(rng() % static_cast<std::uint64_t>(range));
    const long j = static_cast<long>(rng() % static_cast<std::uint64_t>(range));
    ++rep.checked;
    if (!check(i, j)) return {false, rep.checked, i, j};
  }
  return rep;
}

namespace {

struct FoldSearch {
  const std::vector<GrElement>& cls;
  std::vector<long> order;
  long budget = 200000;
  Integer best_score = -1;
  std::vector<long> best_choice;
  std::vector<Integer> best_left;

  void run(std::size_t k, std::vector<Integer>& left, std::vector<long>& chosen, const Integer& score) {
    if (--budget < 0 && best_score >= 0) return;
    if (k == order.size()) {
      if (score > best_score) {
        best_score = score;
        best_choice = chosen;
        best_left = left;
      }
      return;
    }
    const auto& c = cls[order[k]].coeffs;
    Integer most = -1;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      Integer q = left[j] / c[j];
      if (most < 0 || q < most) most = q;
    }
    const long top = most.get_si();
    const Integer len = cls[order[k]].total();
    for (long t = top; t >= 0; --t) {
      for (std::size_t j = 0; j < c.size(); ++j) left[j] -= t * c[j];
      for (long r = 0; r < t; ++r) chosen.push_back(order[k]);
      run(k + 1, left, chosen, score + t * len);
      for (long r = 0; r < t; ++r) chosen.pop_back();
      for (std::size_t j = 0; j < c.size(); ++j) left[j] += t * c[j];
      if (budget < 0) return;
    }
  }
};

}  // namespace

Folded fold_projectives(long p, int n, const GrElement& v) {
  if (!v.effective()) fail(ErrorKind::InvalidArgument, "fold_projectives: class is not effective");
  auto classes = projective_classes(p, n);
  FoldSearch s{*classes, {}, 200000, -1, {}, {}};
  for (long i = 0; i < static_cast<long>(classes->size()); ++i)
    if ((*classes)[i].total() > 1) s.order.push_back(i);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](long x, long y) { return (*classes)[x].total() > (*classes)[y].total(); });
  std::vector<Integer> left = v.coeffs;
  std::vector<long> chosen;
  s.run(0, left, chosen, 0);
  Folded f;
  f.projectives = s.best_choice;
  std::sort(f.projectives.begin(), f.projectives.end());
  f.remainder = GrElement::zero(p, n);
  for (std::size_t j = 0; j < s.best_left.size(); ++j) {
    if (s.best_left[j] == 0) continue;
    f.simples.push_back(static_cast<long>(j));
    f.remainder.coeffs[j] = s.best_left[j] - 1;
  }
  return f;
}

std::string Folded::str(const std::string& sep) const {
  std::vector<std::string> parts;
  for (long j : simples) {
    const Integer extra = remainder.coeffs.empty() ? Integer(0) : remainder.coeffs[j];
    parts.push_back(extra == 0 ? "L" + std::to_string(j) : Integer(extra + 1).get_str() + "L" + std::to_string(j));
  }
  for (long i : projectives) parts.push_back("P" + std::to_string(i));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) s += sep + parts[k];
  return s;
}

}  // namespace verkit
