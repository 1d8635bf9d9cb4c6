#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ranges>
#include <span>
#include <string>
#include <vector>

namespace fqcount {

/// An element of F_{p^k}, encoded as the integer sum c_i p^i of its
/// coefficients in the polynomial basis 1, x, ..., x^{k-1}. The prime
/// subfield is exactly the codes 0..p-1.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Immutable finite field F_{p^k}, p an odd prime.
///
/// The model is fixed deterministically: the modulus is the monic irreducible
/// of degree k whose coefficient vector (c_0, ..., c_{k-1}) is lexicographically
/// smallest, and the generator is the element of full multiplicative order
/// with the smallest code. Construction builds exp/log tables, so the field
/// must be small enough to enumerate (see kMaxFieldSize). Copies share state.
class FieldCtx {
 public:
  static constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;

  /// Throws InvalidArgument for even or composite p, k == 0, or p^k larger
  /// than kMaxFieldSize.
  static FieldCtx make(std::uint64_t p, unsigned k = 1);

  std::uint64_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint64_t size() const noexcept;
  /// Monic modulus, coefficients low-to-high (length k+1).
  std::span<const std::uint32_t> modulus() const noexcept;
  Elem generator() const noexcept;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  /// Throws InvalidArgument if a coefficient is outside [0, p) or there are
  /// more than k of them.
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Throws InvalidArgument if code >= size().
  Elem from_code(std::uint64_t code) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;

  bool in_prime_subfield(Elem x) const noexcept { return x.code < p_; }

  Elem add(Elem x, Elem y) const noexcept;
  Elem sub(Elem x, Elem y) const noexcept;
  Elem neg(Elem x) const noexcept;
  Elem mul(Elem x, Elem y) const noexcept;
  /// Throws InvalidArgument for x == 0.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  /// x^e with x^0 = 1 (including 0^0).
  Elem pow(Elem x, std::uint64_t e) const noexcept;

  /// generator^e.
  Elem exp(std::uint64_t e) const noexcept;
  /// Discrete log to the base generator(); throws InvalidArgument for 0.
  std::uint64_t log(Elem x) const;

  /// Every element exactly once, zero first, in code order.
  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(q_)) |
           std::views::transform([](std::uint32_t c) { return Elem{c}; });
  }

  /// Sum over a in F_q of a^m, with 0^0 = 1.
  Elem power_sum(std::uint64_t m) const noexcept;

  std::string to_string(Elem x) const;
  bool same_field(const FieldCtx& other) const noexcept { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit FieldCtx(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
  // Hot-path copies of Impl data.
  std::uint64_t p_ = 0;
  std::uint64_t q_ = 0;
  unsigned k_ = 0;
  const std::uint32_t* exp_ = nullptr;
  const std::uint32_t* log_ = nullptr;
};

/// Free-function spellings of the element operations.
inline Elem add(const FieldCtx& f, Elem x, Elem y) { return f.add(x, y); }
inline Elem sub(const FieldCtx& f, Elem x, Elem y) { return f.sub(x, y); }
inline Elem mul(const FieldCtx& f, Elem x, Elem y) { return f.mul(x, y); }
inline Elem neg(const FieldCtx& f, Elem x) { return f.neg(x); }
inline Elem inv(const FieldCtx& f, Elem x) { return f.inv(x); }
inline Elem pow(const FieldCtx& f, Elem x, std::uint64_t e) { return f.pow(x, e); }

/// F_{q^n} together with the embedding of its subfield F_q.
///
/// Both fields are built with FieldCtx::make, so the embedding sends the
/// generator x of the base model to the smallest-code root of the base
/// modulus inside the extension.
class Extension {
 public:
  Extension(FieldCtx base, unsigned n);

  const FieldCtx& base() const noexcept { return base_; }
  const FieldCtx& field() const noexcept { return field_; }
  unsigned degree() const noexcept { return n_; }
  /// q^n as an integer.
  std::uint64_t size() const noexcept { return field_.size(); }

  Elem lift(Elem x) const noexcept { return lift_[x.code]; }

 private:
  FieldCtx base_;
  FieldCtx field_;
  unsigned n_;
  std::vector<Elem> lift_;
};

namespace detail {
bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;
}  // namespace detail

}  // namespace fqcount
