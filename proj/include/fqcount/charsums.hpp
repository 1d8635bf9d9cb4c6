#pragma once

#include <cstdint>
#include <optional>

#include "fqcount/field.hpp"

namespace fqcount {

/// ax^3 + bx^2 + cx + d over a field.
struct Cubic {
  Elem a, b, c, d;
  /// (d, c, b, a), the polynomial x^3 f(1/x).
  Cubic reversed() const noexcept { return {d, c, b, a}; }
};

/// Multiplicity pattern of the roots of a cubic over the algebraic closure:
/// 1 = three distinct roots, 2 = one double root, 3 = a triple root.
/// alpha = a(a1 - a2) for f = a(x - a1)^2 (x - a2), present exactly when
/// delta_prime == 2.
struct RootProfile {
  int delta_prime = 1;
  std::optional<Elem> alpha;
  std::optional<Elem> double_root;
  std::optional<Elem> simple_root;
};

/// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2. Throws InvalidArgument for a == 0.
Elem discriminant_cubic(const FieldCtx& F, const Cubic& f);

/// Throws InvalidArgument for a == 0 and PreconditionError for a repeated
/// root in characteristic 3.
RootProfile root_profile(const FieldCtx& F, const Cubic& f);

/// Coefficients of f(x + e).
Cubic shift_cubic(const FieldCtx& F, const Cubic& f, Elem e);

class Extension;

/// The sums below run over x in F_{q^n} = ext.field(); coefficients live in
/// ext.base(). Traces are taken over the base field and lifted with s_n.

/// sum chi_2(ax^2 + bx + c). Throws InvalidArgument for a == 0.
std::int64_t quad_sum_quadratic(const Extension& ext, Elem a, Elem b, Elem c);

/// sum chi_2(f(x)) for a cubic f.
std::int64_t quad_sum_cubic(const Extension& ext, const Cubic& f);

/// sum chi_2(f(x)) chi_2(x). The case split is on the root profile of f, while
/// the Frobenius trace and alpha are taken from the reversed cubic
/// d x^3 + c x^2 + b x + a. Throws InvalidArgument if a == 0 or d == 0.
std::int64_t quad_sum_cubic_times_x(const Extension& ext, const Cubic& f);

/// sum [chi_4(f(x)) + chi_4^3(f(x))] for f = ax^2 + bx + c, base q = 1 mod 4.
/// Throws PreconditionError for q != 1 mod 4 and InvalidArgument for a == 0.
std::int64_t quartic_char_pair_sum(const Extension& ext, Elem a, Elem b, Elem c);

}  // namespace fqcount
