#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "fqcount/families.hpp"
#include "fqcount/field.hpp"

namespace fqcount {

/// An affine plane curve to be counted by enumeration.
///
/// The power form y^i * h(x) = g(x) is counted one fiber at a time: for each x
/// the number of y follows from the discrete log of g(x)/h(x), so the cost is
/// q evaluations rather than q^2. Any other curve can be given as a predicate
/// P(x, y) and is counted over all pairs.
class AffineEquation {
 public:
  using Poly = std::vector<Elem>;  // coefficients in the counting field, low-to-high
  using Predicate = std::function<bool(Elem, Elem)>;

  static AffineEquation power_form(unsigned i, Poly h, Poly g);
  static AffineEquation predicate(Predicate p);

  bool is_power_form() const noexcept { return !pred_; }
  unsigned exponent() const noexcept { return i_; }
  const Poly& lhs_factor() const noexcept { return h_; }
  const Poly& rhs() const noexcept { return g_; }
  /// Evaluate the defining relation at one point.
  bool holds(const FieldCtx& F, Elem x, Elem y) const;

 private:
  unsigned i_ = 1;
  Poly h_, g_;
  Predicate pred_;
};

struct OracleOptions {
  /// Maximum number of point evaluations (fibers for the power form, pairs
  /// otherwise) before BudgetExceeded is thrown.
  std::uint64_t budget = 100'000'000;
  /// Worker threads for the x-range; 0 picks from the hardware, 1 is serial.
  /// The result does not depend on the schedule.
  unsigned threads = 0;
};

/// Number of (x, y) in F x F on the curve.
std::int64_t count_affine(const AffineEquation& eq, const FieldCtx& F, const OracleOptions& opts = {});

/// Double loop over all pairs, ignoring the power-form shortcut. For
/// cross-checking the shortcut on small fields.
std::int64_t count_affine_naive(const AffineEquation& eq, const FieldCtx& F, const OracleOptions& opts = {});

/// The affine equation of a family member over ext.field(), with the base
/// coefficients lifted.
AffineEquation family_equation(const FamilySpec& spec, const Extension& ext);

enum class Provenance { Proof, Empirical };

struct InfinityConstant {
  std::int64_t value = 0;
  Provenance provenance = Provenance::Proof;
};

/// Points this artifact adds at infinity for a family member, from one fixed
/// table. Root counts are found by enumeration in F_{q^n}, not from characters.
InfinityConstant infinity_constant(const FamilySpec& spec, const Extension& ext);

/// Provenance of the infinity-constant rule for a family (and curve selector).
Provenance infinity_provenance(FamilyTag tag, unsigned curve = 1);
std::string_view infinity_rule(FamilyTag tag, unsigned curve = 1);

/// count_affine + infinity_constant: the reference N_n.
PointCount count_total(const FamilySpec& spec, const Extension& ext, const OracleOptions& opts = {});

}  // namespace fqcount
