#include "verkit/charring.hpp"

#include <sstream>

#include "verkit/error.hpp"

namespace verkit {

SymChar::SymChar(Coeffs c) {
  for (auto& [w, v] : c)
    if (v != 0) c_.emplace(w, std::move(v));
}

Integer SymChar::at(long w) const {
  auto it = c_.find(w);
  return it == c_.end() ? Integer(0) : it->second;
}

bool SymChar::is_symmetric() const {
  for (const auto& [w, v] : c_)
    if (at(-w) != v) return false;
  return true;
}

void SymChar::add(long w, const Integer& v) {
  if (v == 0) return;
  auto [it, fresh] = c_.try_emplace(w, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

SymChar& SymChar::operator+=(const SymChar& o) {
  for (const auto& [w, v] : o.c_) add(w, v);
  return *this;
}

SymChar& SymChar::operator-=(const SymChar& o) {
  for (const auto& [w, v] : o.c_) add(w, -v);
  return *this;
}

SymChar operator*(const Integer& s, const SymChar& a) {
  SymChar r;
  if (s == 0) return r;
  for (const auto& [w, v] : a.c_) r.c_.emplace(w, s * v);
  return r;
}

std::string SymChar::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, v] : c_) {
    if (!first) os << ", ";
    first = false;
    os << w << ':' << v;
  }
  os << '}';
  return os.str();
}

SymChar weyl_char(long m) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "weyl_char: negative highest weight");
  SymChar::Coeffs c;
  for (long w = -m; w <= m; w += 2) c.emplace(w, 1);
  return SymChar(std::move(c));
}

SymChar mul(const SymChar& a, const SymChar& b) {
  SymChar::Coeffs r;
  Integer t;
  for (const auto& [x, u] : a.coeffs())
    for (const auto& [y, v] : b.coeffs()) {
      t = u * v;
      r[x + y] += t;
    }
  return SymChar(std::move(r));
}

SymChar frobenius_twist(const SymChar& a, long p) {
  SymChar::Coeffs r;
  for (const auto& [w, v] : a.coeffs()) r.emplace(w * p, v);
  return SymChar(std::move(r));
}

std::map<long, Integer> weyl_expand(const SymChar& a) {
  // Read off the top weight and subtract its Weyl character; each
  // step strictly lowers the top of the positive part.
  SymChar::Coeffs work = a.coeffs();
  std::map<long, Integer> d;
  while (!work.empty()) {
    auto top = work.rbegin();
    const long m = top->first;
    if (m < 0) break;  // not symmetric; leave the residue
    Integer c = top->second;
    d.emplace(m, c);
    for (long w = -m; w <= m; w += 2) {
      auto it = work.find(w);
      if (it == work.end()) {
        work.emplace(w, -c);
      } else {
        it->second -= c;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return d;
}

Integer inner(const SymChar& a, const SymChar& b) {
  auto da = weyl_expand(a);
  auto db = weyl_expand(b);
  Integer s = 0;
  for (const auto& [m, x] : da) {
    auto it = db.find(m);
    if (it != db.end()) s += x * it->second;
  }
  return s;
}

Integer dim_at_one(const SymChar& a) {
  Integer s = 0;
  for (const auto& [w, v] : a.coeffs()) s += v;
  return s;
}

}  // namespace verkit
