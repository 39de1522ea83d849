#include "verkit/cyclo.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "verkit/digits.hpp"
#include "verkit/error.hpp"
#include "verkit/tilting.hpp"

namespace verkit {

namespace {
constexpr long double kPi = 3.141592653589793238462643383279502884L;
}

std::shared_ptr<const CycloContext> CycloContext::get(long p, int n) {
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const CycloContext>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, n}];
  if (!slot) slot = std::make_shared<const CycloContext>(p, n);
  return slot;
}

CycloContext::CycloContext(long p, int n) : p_(p), n_(n) {
  require_prime(p);
  if (n < 1) fail(ErrorKind::InvalidArgument, "CycloContext: n must be at least 1");
  const long top = ipow(p, n - 1);
  order_ = 2 * top * p;
  if (p == 2) {
    degree_ = static_cast<std::size_t>(2 * top);
    tail_ = {{0, -1}};
  } else {
    degree_ = static_cast<std::size_t>((p - 1) * top);
    for (long j = 0; j <= p - 2; ++j) tail_.emplace_back(static_cast<std::size_t>(j * top), j % 2 == 0 ? -1 : 1);
  }
  modulus_.assign(degree_ + 1, Integer(0));
  modulus_[degree_] = 1;
  for (auto [k, s] : tail_) modulus_[k] -= s;

  // x^{2p^n} must reduce to 1 and x^{p^n} to -1
  std::vector<Integer> probe(order_ + 1);
  probe[order_] = 1;
  auto r = reduce(probe);
  std::vector<Integer> one(degree_);
  one[0] = 1;
  if (r != one) fail(ErrorKind::InvalidArgument, "CycloContext: modulus does not divide x^{2p^n}-1");
  std::vector<Integer> half(order_ / 2 + 1);
  half[order_ / 2] = 1;
  one[0] = -1;
  if (reduce(half) != one) fail(ErrorKind::InvalidArgument, "CycloContext: q^{p^n} != -1");
  std::complex<long double> acc = 0;
  for (std::size_t k = 0; k < modulus_.size(); ++k)
    acc += static_cast<long double>(modulus_[k].get_d()) * std::polar(1.0L, kPi * k / (order_ / 2));
  if (std::abs(acc) > 1e-9L * static_cast<long double>(degree_)) fail(ErrorKind::InvalidArgument, "CycloContext: q is not a root of the modulus");
}

std::vector<Integer> CycloContext::reduce(std::vector<Integer> a) const {
  for (std::size_t k = a.size(); k-- > degree_;) {
    if (a[k] == 0) continue;
    const Integer c = a[k];
    a[k] = 0;
    for (auto [e, s] : tail_) {
      if (s > 0) a[k - degree_ + e] += c;
      else a[k - degree_ + e] -= c;
    }
  }
  a.resize(degree_);
  return a;
}

CycloInt::CycloInt(std::shared_ptr<const CycloContext> ctx) : ctx_(std::move(ctx)), c_(ctx_->degree()) {}

CycloInt::CycloInt(std::shared_ptr<const CycloContext> ctx, const Integer& c) : CycloInt(std::move(ctx)) { c_[0] = c; }

CycloInt::CycloInt(std::shared_ptr<const CycloContext> ctx, std::vector<Integer> coeffs) : ctx_(std::move(ctx)) {
  c_ = ctx_->reduce(std::move(coeffs));
}

CycloInt CycloInt::monomial(std::shared_ptr<const CycloContext> ctx, long k) {
  const long ord = ctx->order();
  k %= ord;
  if (k < 0) k += ord;
  CycloInt r(ctx);
  int sign = 1;
  if (k >= ord / 2) {  // q^{p^n} = -1
    k -= ord / 2;
    sign = -1;
  }
  const long deg = static_cast<long>(ctx->degree());
  if (k < deg) {
    r.c_[k] = sign;
    return r;
  }
  std::vector<Integer> v(k + 1);
  v[k] = sign;
  r.c_ = ctx->reduce(std::move(v));
  return r;
}

bool CycloInt::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

void CycloInt::same_ring(const CycloInt& o) const {
  if (!ctx_ || !o.ctx_ || ctx_->order() != o.ctx_->order())
    fail(ErrorKind::InvalidArgument, "CycloInt: operands live in different rings");
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  same_ring(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  same_ring(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  a.same_ring(b);
  const std::size_t d = a.c_.size();
  std::vector<Integer> prod(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return CycloInt(a.ctx_, std::move(prod));
}

CycloInt operator*(const Integer& s, CycloInt a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

bool operator==(const CycloInt& a, const CycloInt& b) {
  a.same_ring(b);
  return a.c_ == b.c_;
}

CycloInt CycloInt::conjugate() const {
  CycloInt r(ctx_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) r += c_[k] * monomial(ctx_, -static_cast<long>(k));
  return r;
}

Approx CycloInt::numeric() const {
  const long half = ctx_->order() / 2;
  std::complex<long double> acc = 0;
  long double mass = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const long double c = static_cast<long double>(c_[k].get_d());
    acc += c * std::polar(1.0L, kPi * static_cast<long double>(k) / half);
    mass += std::fabs(c);
  }
  // per-term rounding of polar() and the conversion, plus summation
  const long double err = mass * (8.0L * LDBL_EPSILON * (c_.size() + 4) + DBL_EPSILON);
  return {acc, err};
}

std::string CycloInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << (c_[k] > 0 ? " + " : " - ");
    else if (c_[k] < 0) os << '-';
    first = false;
    Integer a = abs(c_[k]);
    if (k == 0) os << a;
    else {
      if (a != 1) os << a << '*';
      os << "q^" << k;
    }
  }
  if (first) os << '0';
  return os.str();
}

CycloInt qint(const std::shared_ptr<const CycloContext>& ctx, long m, int t) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "qint: negative argument");
  const long step = ipow(ctx->p(), t);
  CycloInt r(ctx);
  for (long k = 0; k < m; ++k) r += CycloInt::monomial(ctx, step * (m - 1 - 2 * k));
  return r;
}

CycloInt fpdim_simple(long p, int n, long i) {
  auto ctx = CycloContext::get(p, n);
  if (i < 0 || i >= num_simples(p, n)) fail(ErrorKind::OutOfRange, "fpdim_simple: label out of range");
  auto d = to_digits(i, p, n);
  CycloInt r(ctx, Integer(1));
  for (int k = 1; k <= n; ++k) {
    if (d[k - 1] == 0) continue;
    r = r * qint(ctx, d[k - 1] + 1, n - k);
  }
  return r;
}

CycloInt fpdim_projective(long p, int n, long i_simple) {
  auto ctx = CycloContext::get(p, n);
  const long s = steinberg_label(p, n, SimpleLabel{i_simple}).v;
  CycloInt r(ctx);
  for (long b : descendants(s + 1, p, n)) r += qint(ctx, b);
  return r;
}

CdCheck verify_cd_eq_p(long p, int n) {
  const auto c = cartan_descendant(p, n);
  const long ns = num_simples(p, n), b = proj_begin(p, n);
  std::vector<CycloInt> dims;
  std::vector<long> col(ns);
  for (long j = 0; j < ns; ++j) {
    dims.push_back(fpdim_simple(p, n, j));
    col[j] = steinberg_label(p, n, SimpleLabel{j}).v - b;
  }
  auto ctx = CycloContext::get(p, n);
  for (long i = 0; i < ns; ++i) {
    CycloInt lhs(ctx);
    for (long j = 0; j < ns; ++j) {
      const Integer& cij = c(col[i], col[j]);
      if (cij != 0) lhs += cij * dims[j];
    }
    if (!(lhs == fpdim_projective(p, n, i))) return {false, col[i] + b};
  }
  return {};
}

std::pair<Integer, long> dim_simple(long p, int n, long i) {
  if (i < 0 || i >= num_simples(p, n)) fail(ErrorKind::OutOfRange, "dim_simple: label out of range");
  Integer d = 1;
  for (int x : to_digits(i, p, n)) d *= x + 1;
  Integer r = d % p;
  return {d, r.get_si()};
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string IntPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!first) os << (c[k] > 0 ? " + " : " - ");
    else if (c[k] < 0) os << '-';
    first = false;
    Integer a = abs(c[k]);
    if (k == 0 || a != 1) os << a;
    if (k > 0) os << (a != 1 ? "*" : "") << 'u' << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) os << '0';
  return os.str();
}

IntPoly chebyshev_Q(long p, int n) {
  require_prime(p);
  if (n < 0) fail(ErrorKind::InvalidArgument, "chebyshev_Q: negative n");
  return IntPoly(chebyshev_S(ipow(p, n) - 1));
}

std::pair<IntPoly, IntPoly> split(const IntPoly& q) {
  std::vector<Integer> pos(q.c.size()), neg(q.c.size());
  for (std::size_t k = 0; k < q.c.size(); ++k) {
    if (q.c[k] > 0) pos[k] = q.c[k];
    else if (q.c[k] < 0) neg[k] = -q.c[k];
  }
  return {IntPoly(std::move(pos)), IntPoly(std::move(neg))};
}

CycloInt evaluate(const IntPoly& f, const CycloInt& x) {
  CycloInt r(x.context_ptr());
  for (std::size_t k = f.c.size(); k-- > 0;) r = r * x + CycloInt(x.context_ptr(), f.c[k]);
  return r;
}

Approx fpdim_category(long p, int n) {
  std::complex<long double> acc = 0;
  long double err = 0;
  for (long i = 0; i < num_simples(p, n); ++i) {
    auto a = fpdim_simple(p, n, i).numeric();
    auto b = fpdim_projective(p, n, i).numeric();
    acc += a.value * b.value;
    err += std::abs(a.value) * b.error + std::abs(b.value) * a.error + a.error * b.error;
  }
  return {acc, err};
}

long double fpdim_category_closed(long p, int n) {
  const long double N = static_cast<long double>(ipow(p, n));
  const long double s = std::sin(kPi / N);
  return N / (2.0L * s * s);
}

}  // namespace verkit
