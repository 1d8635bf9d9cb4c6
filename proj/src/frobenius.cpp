#include "fqcount/frobenius.hpp"

#include <limits>

#include "fqcount/charsums.hpp"
#include "fqcount/error.hpp"

namespace fqcount {

namespace detail {

std::uint64_t isqrt(std::uint64_t v) noexcept {
  std::uint64_t r = 0;
  for (std::uint64_t bit = std::uint64_t{1} << 62; bit; bit >>= 2) {
    if (v >= r + bit) {
      v -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
  }
  return r;
}

}  // namespace detail

bool FrobeniusData::in_hasse_range() const noexcept {
  const auto t = static_cast<unsigned __int128>(trace < 0 ? -trace : trace);
  return t * t <= static_cast<unsigned __int128>(4) * q;
}

namespace {

// v as "s" when v is a perfect square, otherwise nullopt.
std::optional<std::uint64_t> exact_root(std::uint64_t v) {
  const auto r = detail::isqrt(v);
  if (r * r == v) return r;
  return std::nullopt;
}

}  // namespace

std::string FrobeniusData::omega_string() const {
  const std::int64_t t = trace;
  // Imaginary part squared is (4q - t^2) / 4.
  const auto t2 = static_cast<std::uint64_t>(t < 0 ? -t : t);
  const std::uint64_t four_q_minus = 4 * q - t2 * t2;
  std::string real;
  std::string imag;
  if (t % 2 == 0) {
    if (t != 0) real = std::to_string(t / 2);
    const std::uint64_t m = four_q_minus / 4;
    if (auto s = exact_root(m)) {
      if (*s == 1) imag = "i";
      else if (*s != 0) imag = std::to_string(*s) + "i";
    } else {
      imag = "i*sqrt(" + std::to_string(m) + ")";
    }
  } else {
    real = std::to_string(t) + "/2";
    if (auto s = exact_root(four_q_minus)) {
      imag = "(" + std::to_string(*s) + "/2)i";
    } else {
      imag = "i*sqrt(" + std::to_string(four_q_minus) + "/4)";
    }
  }
  if (real.empty() && imag.empty()) return "0";
  if (real.empty()) return imag;
  if (imag.empty()) return real;
  return real + " + " + imag;
}

FrobeniusData trace_naive(const FieldCtx& F, Elem a, Elem b, Elem c, Elem d) {
  if (a == F.zero()) throw InvalidArgument("leading coefficient must be nonzero");
  std::int64_t sum = 0;
  for (Elem x : F.elements()) {
    const Elem v = F.add(F.mul(F.add(F.mul(F.add(F.mul(a, x), b), x), c), x), d);
    if (v == F.zero()) continue;
    sum += F.log(v) % 2 == 0 ? 1 : -1;
  }
  return {F.size(), -sum};
}

LucasBinomial::LucasBinomial(std::uint64_t p) : p_(p) {
  if (!detail::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (p > FieldCtx::kMaxFieldSize) throw InvalidArgument("prime too large for a factorial table");
  fact_.resize(p);
  inv_fact_.resize(p);
  fact_[0] = 1;
  for (std::uint64_t i = 1; i < p; ++i) fact_[i] = static_cast<std::uint32_t>(fact_[i - 1] * i % p);
  inv_fact_[p - 1] = static_cast<std::uint32_t>(detail::powmod(fact_[p - 1], p - 2, p));
  for (std::uint64_t i = p - 1; i > 0; --i) inv_fact_[i - 1] = static_cast<std::uint32_t>(inv_fact_[i] * i % p);
}

std::uint64_t LucasBinomial::digit(std::uint64_t n, std::uint64_t m) const {
  if (m > n) return 0;
  return std::uint64_t{fact_[n]} * inv_fact_[m] % p_ * inv_fact_[n - m] % p_;
}

std::uint64_t LucasBinomial::operator()(std::uint64_t n, std::uint64_t m) const {
  std::uint64_t r = 1;
  while ((n || m) && r) {
    r = r * digit(n % p_, m % p_) % p_;
    n /= p_;
    m /= p_;
  }
  return r;
}

std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  if (!detail::is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  std::uint64_t r = 1 % p;
  while (n || m) {
    const std::uint64_t ni = n % p, mi = m % p;
    if (mi > ni) return 0;
    // binom(ni, mi) with ni < p: numerator and denominator are units mod p.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j = 0; j < mi; ++j) {
      num = detail::mulmod(num, ni - j, p);
      den = detail::mulmod(den, j + 1, p);
    }
    r = detail::mulmod(r, detail::mulmod(num, detail::powmod(den, p - 2, p), p), p);
    n /= p;
    m /= p;
  }
  return r;
}

TraceResidue trace_congruence(const FieldCtx& F, Elem A, Elem B, Elem C) {
  if (A == F.zero()) throw PreconditionError("A must be nonzero");
  if (discriminant_cubic(F, {A, F.zero(), B, C}) == F.zero())
    throw PreconditionError("y^2 = Ax^3 + Bx + C is singular (zero discriminant)");
  const std::uint64_t p = F.characteristic();
  const std::uint64_t N = (F.size() - 1) / 2;
  const LucasBinomial binom(p);
  Elem sum = F.zero();
  for (std::uint64_t l = (N + 2) / 3; 4 * l <= 2 * N; ++l) {
    const std::uint64_t coef = binom(N, 2 * l) * binom(2 * l, N - l) % p;
    if (coef == 0) continue;
    Elem term = F.from_int(static_cast<std::int64_t>(coef));
    term = F.mul(term, F.pow(A, N - l));
    term = F.mul(term, F.pow(B, 3 * l - N));
    term = F.mul(term, F.pow(C, N - 2 * l));
    sum = F.add(sum, term);
  }
  if (!F.in_prime_subfield(sum)) throw PreconditionError("congruence sum left the prime subfield");
  return {p, sum.code};
}

FrobeniusData trace_exact(const FieldCtx& F, Elem A, Elem B, Elem C) {
  const std::uint64_t p = F.characteristic();
  if (F.degree() != 1 || p < 17)
    throw PreconditionError("the residue mod p determines the trace only over prime fields with p >= 17");
  const auto r = static_cast<std::int64_t>(trace_congruence(F, A, B, C).residue);
  const auto ps = static_cast<std::int64_t>(p);
  FrobeniusData fd{p, r};
  if (!fd.in_hasse_range()) fd.trace = r - ps;
  return fd;
}

FrobeniusData trace_general(const FieldCtx& F, Elem a, Elem b, Elem c, Elem d, TraceMethod method) {
  if (a == F.zero()) throw InvalidArgument("leading coefficient must be nonzero");
  const bool resolvable = F.degree() == 1 && F.characteristic() >= 17;
  if (method == TraceMethod::Naive || (method == TraceMethod::Auto && !resolvable))
    return trace_naive(F, a, b, c, d);
  if (F.characteristic() == 3) throw PreconditionError("removing the x^2 term needs characteristic != 3");
  if (!resolvable)
    throw PreconditionError("the residue mod p determines the trace only over prime fields with p >= 17");
  Cubic f{a, b, c, d};
  if (b != F.zero()) f = shift_cubic(F, f, F.neg(F.div(b, F.mul(F.from_int(3), a))));
  return trace_exact(F, f.a, f.c, f.d);
}

std::int64_t checked_pow(std::uint64_t q, unsigned n) {
  __int128 r = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= q;
    if (r > std::numeric_limits<std::int64_t>::max()) throw OverflowError("q^n does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t s_n(const FrobeniusData& fd, unsigned n) {
  if (n == 0) return 2;
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  __int128 prev = 2, cur = fd.trace;
  const __int128 q = fd.q;
  for (unsigned k = 2; k <= n; ++k) {
    const __int128 next = fd.trace * cur - q * prev;
    if (next < lo || next > hi) throw OverflowError("s_n does not fit in 64 bits");
    prev = cur;
    cur = next;
  }
  return static_cast<std::int64_t>(cur);
}

PointCount count_elliptic(const FieldCtx& F, Elem a, Elem b, Elem c, Elem d, unsigned n) {
  if (a == F.zero()) throw PreconditionError("a must be nonzero");
  if (discriminant_cubic(F, {a, b, c, d}) == F.zero())
    throw PreconditionError("cubic has a repeated root (zero discriminant)");
  const auto fd = trace_general(F, a, b, c, d);
  return {n, checked_pow(F.size(), n) + 1 - s_n(fd, n)};
}

}  // namespace fqcount
