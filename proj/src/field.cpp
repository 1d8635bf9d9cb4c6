#include "fqcount/field.hpp"

#include <sstream>

#include "fqcount/error.hpp"
#include "fqcount/poly.hpp"

namespace fqcount {

namespace detail {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

struct FieldCtx::Impl {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  Elem generator;
  std::vector<std::uint32_t> exp;  // generator^e, e in [0, q-1)
  std::vector<std::uint32_t> log;  // log[0] unused
};

namespace {

std::uint64_t checked_power(std::uint64_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > FieldCtx::kMaxFieldSize / p) throw InvalidArgument("field size exceeds enumeration limit");
    q *= p;
  }
  return q;
}

// Multiplication of coefficient vectors modulo a monic modulus over F_p.
// Kept separate from poly:: so table construction does not need a FieldCtx
// for the field being built.
class ResidueRing {
 public:
  ResidueRing(std::uint64_t p, std::vector<std::uint32_t> modulus) : p_(p), mod_(std::move(modulus)), k_(mod_.size() - 1) {}

  std::vector<std::uint64_t> decode(std::uint64_t code) const {
    std::vector<std::uint64_t> v(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      v[i] = code % p_;
      code /= p_;
    }
    return v;
  }

  std::uint64_t encode(const std::vector<std::uint64_t>& v) const {
    std::uint64_t code = 0;
    for (std::size_t i = k_; i-- > 0;) code = code * p_ + v[i];
    return code;
  }

  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    for (std::size_t d = prod.size(); d-- > k_;) {
      const std::uint64_t c = prod[d];
      if (!c) continue;
      for (std::size_t j = 0; j < k_; ++j) prod[d - k_ + j] = (prod[d - k_ + j] + (p_ - c) * mod_[j]) % p_;
      prod[d] = 0;
    }
    prod.resize(k_);
    return prod;
  }

  std::vector<std::uint64_t> pow(std::vector<std::uint64_t> a, std::uint64_t e) const {
    std::vector<std::uint64_t> r(k_, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

 private:
  std::uint64_t p_;
  std::vector<std::uint32_t> mod_;
  std::size_t k_;
};

std::vector<std::uint32_t> smallest_irreducible(const FieldCtx& fp, unsigned k) {
  const std::uint64_t p = fp.size();
  const std::uint64_t count = checked_power(p, k);
  for (std::uint64_t t = 0; t < count; ++t) {
    // c_0 is the most significant digit of t: lexicographic on (c_0, c_1, ...).
    std::vector<std::uint32_t> c(k + 1, 0);
    std::uint64_t rest = t;
    for (unsigned i = k; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    c[k] = 1;
    if (c[0] == 0) continue;
    poly::Poly f;
    for (auto v : c) f.push_back(Elem{v});
    if (poly::is_irreducible(fp, f)) return c;
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable for valid input
}

}  // namespace

FieldCtx::FieldCtx(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)),
      p_(impl_->p),
      q_(impl_->q),
      k_(impl_->k),
      exp_(impl_->exp.data()),
      log_(impl_->log.data()) {}

FieldCtx FieldCtx::make(std::uint64_t p, unsigned k) {
  if (k == 0) throw InvalidArgument("extension degree must be positive");
  if (p % 2 == 0) throw InvalidArgument("characteristic must be odd, got " + std::to_string(p));
  if (!detail::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  const std::uint64_t q = checked_power(p, k);

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = q;
  const auto group_primes = detail::prime_factors(q - 1);

  if (k == 1) {
    impl->modulus = {0, 1};
    std::uint64_t g = 1;
    for (std::uint64_t cand = 1; cand < p; ++cand) {
      bool full = true;
      for (auto l : group_primes) {
        if (detail::powmod(cand, (q - 1) / l, p) == 1) {
          full = false;
          break;
        }
      }
      if (full) {
        g = cand;
        break;
      }
    }
    impl->generator = Elem{static_cast<std::uint32_t>(g)};
    impl->exp.resize(q - 1);
    impl->log.assign(q, 0);
    std::uint64_t cur = 1;
    for (std::uint64_t e = 0; e + 1 < q; ++e) {
      impl->exp[e] = static_cast<std::uint32_t>(cur);
      impl->log[cur] = static_cast<std::uint32_t>(e);
      cur = cur * g % p;
    }
    return FieldCtx(std::move(impl));
  }

  const FieldCtx fp = make(p, 1);
  impl->modulus = smallest_irreducible(fp, k);
  const ResidueRing ring(p, impl->modulus);

  std::uint64_t g = 0;
  for (std::uint64_t cand = 1; cand < q; ++cand) {
    const auto v = ring.decode(cand);
    bool full = true;
    for (auto l : group_primes) {
      if (ring.encode(ring.pow(v, (q - 1) / l)) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      g = cand;
      break;
    }
  }
  impl->generator = Elem{static_cast<std::uint32_t>(g)};
  impl->exp.resize(q - 1);
  impl->log.assign(q, 0);
  const auto gv = ring.decode(g);
  std::vector<std::uint64_t> cur(k, 0);
  cur[0] = 1;
  for (std::uint64_t e = 0; e + 1 < q; ++e) {
    const auto code = ring.encode(cur);
    impl->exp[e] = static_cast<std::uint32_t>(code);
    impl->log[code] = static_cast<std::uint32_t>(e);
    cur = ring.mul(cur, gv);
  }
  return FieldCtx(std::move(impl));
}

std::uint64_t FieldCtx::characteristic() const noexcept { return p_; }
unsigned FieldCtx::degree() const noexcept { return k_; }
std::uint64_t FieldCtx::size() const noexcept { return q_; }
std::span<const std::uint32_t> FieldCtx::modulus() const noexcept { return impl_->modulus; }
Elem FieldCtx::generator() const noexcept { return impl_->generator; }

Elem FieldCtx::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw InvalidArgument("too many coefficients for field degree");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return Elem{static_cast<std::uint32_t>(code)};
}

Elem FieldCtx::from_code(std::uint64_t code) const {
  if (code >= q_) throw InvalidArgument("element code out of range");
  return Elem{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> FieldCtx::coeffs(Elem x) const {
  std::vector<std::uint32_t> v(k_);
  std::uint64_t c = x.code;
  for (unsigned i = 0; i < k_; ++i) {
    v[i] = static_cast<std::uint32_t>(c % p_);
    c /= p_;
  }
  return v;
}

Elem FieldCtx::add(Elem x, Elem y) const noexcept {
  if (k_ == 1) {
    std::uint64_t s = std::uint64_t{x.code} + y.code;
    if (s >= p_) s -= p_;
    return Elem{static_cast<std::uint32_t>(s)};
  }
  std::uint64_t a = x.code, b = y.code, r = 0, place = 1;
  while (a || b) {
    std::uint64_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::neg(Elem x) const noexcept {
  if (k_ == 1) return Elem{x.code == 0 ? 0u : static_cast<std::uint32_t>(p_ - x.code)};
  std::uint64_t a = x.code, r = 0, place = 1;
  while (a) {
    const std::uint64_t d = a % p_;
    r += (d ? p_ - d : 0) * place;
    place *= p_;
    a /= p_;
  }
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }

Elem FieldCtx::mul(Elem x, Elem y) const noexcept {
  if (x.code == 0 || y.code == 0) return Elem{0};
  if (k_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{x.code} * y.code % p_)};
  std::uint64_t e = std::uint64_t{log_[x.code]} + log_[y.code];
  if (e >= q_ - 1) e -= q_ - 1;
  return Elem{exp_[e]};
}

Elem FieldCtx::inv(Elem x) const {
  if (x.code == 0) throw InvalidArgument("inverse of zero");
  const std::uint64_t l = log_[x.code];
  return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem FieldCtx::pow(Elem x, std::uint64_t e) const noexcept {
  if (e == 0) return Elem{1};
  if (x.code == 0) return Elem{0};
  const std::uint64_t l = log_[x.code];
  return Elem{exp_[l * (e % (q_ - 1)) % (q_ - 1)]};
}

Elem FieldCtx::exp(std::uint64_t e) const noexcept { return Elem{exp_[e % (q_ - 1)]}; }

std::uint64_t FieldCtx::log(Elem x) const {
  if (x.code == 0) throw InvalidArgument("discrete log of zero");
  return log_[x.code];
}

Elem FieldCtx::power_sum(std::uint64_t m) const noexcept {
  Elem s = zero();
  for (Elem a : elements()) s = add(s, pow(a, m));
  return s;
}

std::string FieldCtx::to_string(Elem x) const {
  if (k_ == 1) return std::to_string(x.code);
  std::ostringstream os;
  os << '[';
  const auto c = coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

Extension::Extension(FieldCtx base, unsigned n)
    : base_(base), field_(base), n_(n) {
  if (n == 0) throw InvalidArgument("extension degree must be positive");
  if (n > 1) field_ = FieldCtx::make(base_.characteristic(), base_.degree() * n);
  lift_.resize(base_.size());
  const auto mod = base_.modulus();
  // Root of the base modulus inside the extension; for prime bases the
  // modulus is x and the root is 0.
  Elem root{0};
  if (base_.degree() > 1) {
    poly::Poly f;
    for (auto c : mod) f.push_back(field_.from_int(c));
    bool found = false;
    for (Elem r : field_.elements()) {
      if (poly::eval(field_, f, r) == field_.zero()) {
        root = r;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidArgument("base modulus has no root in extension");
  }
  for (Elem x : base_.elements()) {
    const auto c = base_.coeffs(x);
    Elem acc = field_.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = field_.add(field_.mul(acc, root), field_.from_int(c[i]));
    lift_[x.code] = acc;
  }
}

}  // namespace fqcount
