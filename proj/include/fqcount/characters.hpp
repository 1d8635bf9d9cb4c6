#pragma once

#include <cstdint>

#include "fqcount/cyclotomic.hpp"
#include "fqcount/field.hpp"

namespace fqcount {

/// The power chi_i^j of the canonical order-i character of a field, where the
/// canonical character sends the field generator to zeta_i.
///
/// At zero: chi_1(0) = 1 and chi_i(0) = 0 for i >= 2. A power chi_i^j with
/// i | j is the trivial character and is 1 everywhere, zero included, so that
/// sums 1 + chi + ... + chi^{i-1} count i-th roots.
class MultChar {
 public:
  /// Throws InvalidArgument unless 1 <= order <= 4 and order | q - 1.
  MultChar(FieldCtx field, unsigned order, unsigned base_power = 1);

  const FieldCtx& field() const noexcept { return field_; }
  unsigned order() const noexcept { return order_; }
  unsigned base_power() const noexcept { return power_; }
  bool is_trivial() const noexcept { return power_ == 0; }

  CyclotomicValue operator()(Elem x) const;
  MultChar pow(unsigned j) const { return MultChar(field_, order_, (power_ * j) % order_); }

 private:
  FieldCtx field_;
  unsigned order_;
  unsigned power_;
};

/// generator^result == x; throws InvalidArgument for x == 0.
std::uint64_t discrete_log(const FieldCtx& F, Elem x);

CyclotomicValue char_eval(const MultChar& chi, Elem x);

/// Euler's criterion: 0 at 0, otherwise x^{(q-1)/2} read as +1 or -1.
int quadratic_char(const FieldCtx& F, Elem x);

/// Sum of chi over F_q^*. Throws PreconditionError for the trivial character.
CyclotomicValue char_sum(const MultChar& chi);

/// sum_{j=1}^{i-1} chi_i^j(x) as an integer: the number of i-th roots of x
/// minus one for x != 0, and 0 at x = 0 (for i >= 2).
std::int64_t nontrivial_power_sum(const FieldCtx& F, unsigned order, Elem x);

/// Number of y in F with y^i == x, read off from the characters.
std::int64_t root_count(const FieldCtx& F, unsigned order, Elem x);

}  // namespace fqcount
