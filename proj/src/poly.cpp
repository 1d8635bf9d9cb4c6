#include "fqcount/poly.hpp"

#include <algorithm>

#include "fqcount/error.hpp"

namespace fqcount::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == Elem{0}) f.pop_back();
}

int degree(const Poly& f) {
  Poly g = f;
  trim(g);
  return static_cast<int>(g.size()) - 1;
}

Poly add(const FieldCtx& F, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), F.zero());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = F.add(r[i], g[i]);
  trim(r);
  return r;
}

Poly sub(const FieldCtx& F, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), F.zero());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = F.sub(r[i], g[i]);
  trim(r);
  return r;
}

Poly mul(const FieldCtx& F, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, F.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == F.zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const FieldCtx& F, const Poly& f, const Poly& g) {
  Poly d = g;
  trim(d);
  if (d.empty()) throw InvalidArgument("polynomial division by zero");
  Poly r = f;
  trim(r);
  if (r.size() < d.size()) return {{}, r};
  Poly quo(r.size() - d.size() + 1, F.zero());
  const Elem lead_inv = F.inv(d.back());
  while (r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const Elem c = F.mul(r.back(), lead_inv);
    quo[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, d[j]));
    trim(r);
  }
  trim(quo);
  return {quo, r};
}

Poly mod(const FieldCtx& F, const Poly& f, const Poly& g) { return divmod(F, f, g).second; }

Poly monic(const FieldCtx& F, const Poly& f) {
  Poly r = f;
  trim(r);
  if (r.empty()) return r;
  const Elem li = F.inv(r.back());
  for (auto& c : r) c = F.mul(c, li);
  return r;
}

Poly gcd(const FieldCtx& F, Poly f, Poly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(F, f);
}

Poly powmod(const FieldCtx& F, const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = mod(F, Poly{F.one()}, m);
  Poly b = mod(F, base, m);
  while (e > 0) {
    if (e & 1) result = mod(F, mul(F, result, b), m);
    e >>= 1;
    if (e) b = mod(F, mul(F, b, b), m);
  }
  return result;
}

Poly derivative(const FieldCtx& F, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1, F.zero());
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), f[i]);
  trim(r);
  return r;
}

Elem eval(const FieldCtx& F, const Poly& f, Elem x) {
  Elem acc = F.zero();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

bool is_irreducible(const FieldCtx& F, const Poly& f) {
  const int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const std::uint64_t q = F.size();
  const Poly x{F.zero(), F.one()};
  // x^(q^j) mod f for j = 0..k
  std::vector<Poly> frob{mod(F, x, f)};
  for (int j = 1; j <= k; ++j) frob.push_back(powmod(F, frob.back(), q, f));
  if (sub(F, frob[k], mod(F, x, f)) != Poly{}) return false;
  for (auto r : detail::prime_factors(static_cast<std::uint64_t>(k))) {
    const Poly h = sub(F, frob[k / r], mod(F, x, f));
    if (degree(gcd(F, h, f)) != 0) return false;
  }
  return true;
}

}  // namespace fqcount::poly
