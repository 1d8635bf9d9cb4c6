#include "fqcount/cyclotomic.hpp"

#include "fqcount/error.hpp"

namespace fqcount {

CyclotomicValue::CyclotomicValue(unsigned order, std::int64_t a, std::int64_t b) : order_(order), a_(a), b_(b) {
  if (order < 1 || order > 4) throw InvalidArgument("cyclotomic order must be 1..4");
  if (order <= 2 && b != 0) throw InvalidArgument("orders 1 and 2 are rational");
}

CyclotomicValue CyclotomicValue::root_of_unity(unsigned order, std::uint64_t k) {
  switch (order) {
    case 1:
      return {1, 1};
    case 2:
      return {2, k % 2 ? -1 : 1};
    case 3:
      switch (k % 3) {
        case 0: return {3, 1, 0};
        case 1: return {3, 0, 1};
        default: return {3, -1, -1};
      }
    case 4:
      switch (k % 4) {
        case 0: return {4, 1, 0};
        case 1: return {4, 0, 1};
        case 2: return {4, -1, 0};
        default: return {4, 0, -1};
      }
    default:
      throw InvalidArgument("cyclotomic order must be 1..4");
  }
}

std::int64_t CyclotomicValue::to_integer() const {
  if (b_ != 0) throw PreconditionError("cyclotomic value " + to_string() + " is not an integer");
  return a_;
}

CyclotomicValue CyclotomicValue::conj() const {
  switch (order_) {
    case 3:
      // conj(zeta) = zeta^2 = -1 - zeta
      return {3, a_ - b_, -b_};
    case 4:
      return {4, a_, -b_};
    default:
      return *this;
  }
}

std::int64_t CyclotomicValue::norm() const noexcept {
  switch (order_) {
    case 3: return a_ * a_ - a_ * b_ + b_ * b_;
    case 4: return a_ * a_ + b_ * b_;
    default: return a_ * a_;
  }
}

namespace {
void require_same(const CyclotomicValue& x, const CyclotomicValue& y) {
  if (x.order() != y.order()) throw InvalidArgument("mixing cyclotomic values of different orders");
}
}  // namespace

CyclotomicValue operator+(const CyclotomicValue& x, const CyclotomicValue& y) {
  require_same(x, y);
  return {x.order_, x.a_ + y.a_, x.b_ + y.b_};
}

CyclotomicValue operator-(const CyclotomicValue& x, const CyclotomicValue& y) {
  require_same(x, y);
  return {x.order_, x.a_ - y.a_, x.b_ - y.b_};
}

CyclotomicValue operator*(const CyclotomicValue& x, const CyclotomicValue& y) {
  require_same(x, y);
  const auto a = x.a_, b = x.b_, c = y.a_, d = y.b_;
  switch (x.order_) {
    case 3: return {3, a * c - b * d, a * d + b * c - b * d};
    case 4: return {4, a * c - b * d, a * d + b * c};
    default: return {x.order_, a * c};
  }
}

std::string CyclotomicValue::to_string() const {
  if (b_ == 0) return std::to_string(a_);
  const char* z = order_ == 4 ? "i" : "z3";
  std::string out;
  if (a_ != 0) out = std::to_string(a_) + (b_ < 0 ? " - " : " + ");
  else if (b_ < 0) out = "-";
  const auto mag = b_ < 0 ? -b_ : b_;
  if (mag != 1) out += std::to_string(mag);
  return out + z;
}

}  // namespace fqcount
