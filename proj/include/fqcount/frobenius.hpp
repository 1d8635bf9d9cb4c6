#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fqcount/field.hpp"

namespace fqcount {

/// Frobenius data of y^2 = f(x) over F_q, stored as the integer trace t. The
/// eigenvalue is omega = t/2 + i*sqrt(q - t^2/4) with Im(omega) >= 0.
struct FrobeniusData {
  std::uint64_t q = 0;
  std::int64_t trace = 0;

  /// t^2 <= 4q. Always true for elliptic curves.
  bool in_hasse_range() const noexcept;
  /// Exact text form of omega, e.g. "7/2 + i*sqrt(27/4)" or "8 + 3i".
  std::string omega_string() const;
};

struct TraceResidue {
  std::uint64_t p = 0;
  std::uint64_t residue = 0;
};

enum class TraceMethod { Auto, Naive, Congruence };

/// q + 1 - N_1 for y^2 = ax^3 + bx^2 + cx + d, counting affine points and the
/// single point at infinity. Works for singular cubics too.
/// Throws InvalidArgument for a == 0.
FrobeniusData trace_naive(const FieldCtx& F, Elem a, Elem b, Elem c, Elem d);

/// Binomial coefficient modulo a prime p via Lucas's theorem, with one
/// factorial table of size p shared across calls.
class LucasBinomial {
 public:
  explicit LucasBinomial(std::uint64_t p);
  std::uint64_t operator()(std::uint64_t n, std::uint64_t m) const;
  std::uint64_t prime() const noexcept { return p_; }

 private:
  std::uint64_t digit(std::uint64_t n, std::uint64_t m) const;
  std::uint64_t p_;
  std::vector<std::uint32_t> fact_;
  std::vector<std::uint32_t> inv_fact_;
};

/// One-off binom(n, m) mod p. Throws InvalidArgument for p not prime.
std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// The binomial-sum congruence for the trace of y^2 = Ax^3 + Bx + C over F
/// (any q = p^k), reduced mod p. Throws PreconditionError if A == 0 or the
/// curve is singular.
TraceResidue trace_congruence(const FieldCtx& F, Elem A, Elem B, Elem C);

/// The unique t = residue mod p with t^2 <= 4p. Requires a prime field with
/// p >= 17; throws PreconditionError otherwise.
FrobeniusData trace_exact(const FieldCtx& F, Elem A, Elem B, Elem C);

/// Trace of y^2 = ax^3 + bx^2 + cx + d by the chosen route. Auto uses the
/// congruence (after removing the x^2 term) on prime fields with p >= 17 and
/// falls back to enumeration otherwise. Congruence refuses p = 3 and fields
/// where the residue does not pin down the trace.
FrobeniusData trace_general(const FieldCtx& F, Elem a, Elem b, Elem c, Elem d,
                            TraceMethod method = TraceMethod::Auto);

/// s_n = omega^n + conj(omega)^n: s_0 = 2, s_1 = t, s_n = t s_{n-1} - q s_{n-2}.
/// Throws OverflowError if a term leaves the int64 range.
std::int64_t s_n(const FrobeniusData& fd, unsigned n);

/// q^n as int64; throws OverflowError when it does not fit.
std::int64_t checked_pow(std::uint64_t q, unsigned n);

struct PointCount {
  unsigned n = 1;
  std::int64_t value = 0;
  friend bool operator==(const PointCount&, const PointCount&) = default;
};

/// q^n + 1 - s_n for the elliptic curve y^2 = ax^3 + bx^2 + cx + d.
/// Throws PreconditionError if the discriminant vanishes.
PointCount count_elliptic(const FieldCtx& F, Elem a, Elem b, Elem c, Elem d, unsigned n);

namespace detail {
/// Integer square root, floor(sqrt(v)).
std::uint64_t isqrt(std::uint64_t v) noexcept;
}  // namespace detail

}  // namespace fqcount
