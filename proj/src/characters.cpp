#include "fqcount/characters.hpp"

#include <string>

#include "fqcount/error.hpp"

namespace fqcount {

MultChar::MultChar(FieldCtx field, unsigned order, unsigned base_power)
    : field_(std::move(field)), order_(order), power_(0) {
  if (order < 1 || order > 4) throw InvalidArgument("character order must be 1..4");
  if ((field_.size() - 1) % order != 0)
    throw InvalidArgument("character order " + std::to_string(order) + " does not divide " +
                          std::to_string(field_.size() - 1));
  power_ = base_power % order;
}

CyclotomicValue MultChar::operator()(Elem x) const {
  if (power_ == 0) return CyclotomicValue::one(order_);
  if (x == field_.zero()) return CyclotomicValue::zero(order_);
  return CyclotomicValue::root_of_unity(order_, field_.log(x) % order_ * power_);
}

std::uint64_t discrete_log(const FieldCtx& F, Elem x) { return F.log(x); }

CyclotomicValue char_eval(const MultChar& chi, Elem x) { return chi(x); }

int quadratic_char(const FieldCtx& F, Elem x) {
  if (x == F.zero()) return 0;
  return F.pow(x, (F.size() - 1) / 2) == F.one() ? 1 : -1;
}

CyclotomicValue char_sum(const MultChar& chi) {
  if (chi.is_trivial()) throw PreconditionError("character sum requires a nontrivial character");
  auto total = CyclotomicValue::zero(chi.order());
  for (Elem x : chi.field().elements()) {
    if (x != chi.field().zero()) total += chi(x);
  }
  return total;
}

std::int64_t nontrivial_power_sum(const FieldCtx& F, unsigned order, Elem x) {
  const MultChar chi(F, order);
  auto total = CyclotomicValue::zero(order);
  for (unsigned j = 1; j < order; ++j) total += chi.pow(j)(x);
  return total.to_integer();
}

std::int64_t root_count(const FieldCtx& F, unsigned order, Elem x) {
  return 1 + nontrivial_power_sum(F, order, x);
}

}  // namespace fqcount
