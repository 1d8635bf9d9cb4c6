#pragma once

#include <cstdint>
#include <string>

namespace fqcount {

/// Exact element a + b*zeta of Z[zeta_i], zeta_i a primitive i-th root of
/// unity, i in {1,2,3,4}. For i <= 2 the b coordinate is always zero.
/// Reduction: zeta_3^2 = -1 - zeta_3, zeta_4^2 = -1.
class CyclotomicValue {
 public:
  CyclotomicValue() = default;
  /// Throws InvalidArgument for an order outside 1..4, or b != 0 with order <= 2.
  CyclotomicValue(unsigned order, std::int64_t a, std::int64_t b = 0);

  static CyclotomicValue zero(unsigned order) { return {order, 0, 0}; }
  static CyclotomicValue one(unsigned order) { return {order, 1, 0}; }
  /// zeta_order^k.
  static CyclotomicValue root_of_unity(unsigned order, std::uint64_t k);

  unsigned order() const noexcept { return order_; }
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }

  bool is_integer() const noexcept { return b_ == 0; }
  /// Throws PreconditionError unless is_integer().
  std::int64_t to_integer() const;
  /// Complex conjugate (zeta -> zeta^{-1}).
  CyclotomicValue conj() const;
  /// Field norm to Q for orders 3 and 4; a^2 for orders 1, 2.
  std::int64_t norm() const noexcept;

  friend CyclotomicValue operator+(const CyclotomicValue& x, const CyclotomicValue& y);
  friend CyclotomicValue operator-(const CyclotomicValue& x, const CyclotomicValue& y);
  friend CyclotomicValue operator*(const CyclotomicValue& x, const CyclotomicValue& y);
  CyclotomicValue& operator+=(const CyclotomicValue& y) { return *this = *this + y; }
  CyclotomicValue& operator*=(const CyclotomicValue& y) { return *this = *this * y; }
  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

  std::string to_string() const;

 private:
  unsigned order_ = 1;
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

}  // namespace fqcount
