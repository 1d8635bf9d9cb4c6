#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqcount/field.hpp"
#include "fqcount/frobenius.hpp"

namespace fqcount {

enum class FamilyTag {
  Y2Cubic,          // y^2 = ax^3 + bx^2 + cx + d                      (a, b, c, d)
  Y2CubicLinear,    // y^2 = (ax^3 + bx^2 + cx + d)(x + e)             (a, b, c, d, e)
  Y2SexticEven,     // y^2 = ax^6 + bx^4 + cx^2 + d                    (a, b, c, d)
  Y2QuarticEven,    // y^2 = ax^4 + bx^2 + c                           (a, b, c)
  QuarticPairC1,    // y^i = (Ax^2 + Bx + C)(ax^2 + bx + c)^{i-1}      (A, B, C, a, b, c)
  QuarticPairC2,    // y^i (ax^2 + bx + c) = Ax^2 + Bx + C             (A, B, C, a, b, c)
  Y2QuadProduct,    // y^2 = (ax^2 + bx + c)(Ax^2 + Bx + C)            (A, B, C, a, b, c)
  Y2QuadRational,   // y^2 (ax^2 + bx + c) = Ax^2 + Bx + C             (A, B, C, a, b, c)
  Y3LinearQuad,     // curve 1: y^3 = (x + a)(Ax^2 + Bx + C),
                    // curve 2: y^3 = (x + a)^2 (Ax^2 + Bx + C)^2      (a, A, B, C)
  Y3Cubic,          // y^3 = ax^3 + b                                  (a, b)
  Y3Sextic,         // y^3 = ax^6 + b                                  (a, b)
  Y4QuarticEven,    // y^4 = ax^4 + bx^2 + c                           (a, b, c)
};

inline constexpr FamilyTag kAllFamilies[] = {
    FamilyTag::Y2Cubic,       FamilyTag::Y2CubicLinear,  FamilyTag::Y2SexticEven, FamilyTag::Y2QuarticEven,
    FamilyTag::QuarticPairC1, FamilyTag::QuarticPairC2,  FamilyTag::Y2QuadProduct, FamilyTag::Y2QuadRational,
    FamilyTag::Y3LinearQuad,  FamilyTag::Y3Cubic,        FamilyTag::Y3Sextic,     FamilyTag::Y4QuarticEven,
};

/// Command-line style name, e.g. "y2-cubic-linear".
std::string_view family_name(FamilyTag tag);
std::optional<FamilyTag> family_from_name(std::string_view name);
std::size_t family_arity(FamilyTag tag);
/// Whether the tag uses the character order i (the quartic pair) or a curve
/// selector (Y3LinearQuad).
bool family_uses_order(FamilyTag tag);
bool family_has_curve_selector(FamilyTag tag);

/// One curve from a family. Coefficients live in the base field F_q.
struct FamilySpec {
  FamilyTag tag = FamilyTag::Y2Cubic;
  std::vector<Elem> coeffs;
  unsigned order = 2;  // i for the quartic pair
  unsigned curve = 1;  // 1 or 2 for Y3LinearQuad
};

/// Throws PreconditionError naming the first violated hypothesis, or
/// InvalidArgument for a wrong coefficient count or selector.
void validate(const FamilySpec& spec, const Extension& ext);

/// As validate, returning the message instead of throwing (empty if admissible).
std::string admissibility_error(const FamilySpec& spec, const Extension& ext);

// Closed forms. Each validates its hypotheses and throws PreconditionError
// when one fails; counts are over ext.field() = F_{q^n}.
PointCount count_y2_cubic(const Extension& ext, Elem a, Elem b, Elem c, Elem d);
PointCount count_y2_cubic_linear(const Extension& ext, Elem a, Elem b, Elem c, Elem d, Elem e);
PointCount count_y2_sextic_even(const Extension& ext, Elem a, Elem b, Elem c, Elem d);
PointCount count_y2_quartic_even(const Extension& ext, Elem a, Elem b, Elem c);
std::pair<PointCount, PointCount> count_quartic_pair(const Extension& ext, unsigned i, Elem A, Elem B, Elem C,
                                                     Elem a, Elem b, Elem c);
PointCount count_y2_quad_product(const Extension& ext, Elem A, Elem B, Elem C, Elem a, Elem b, Elem c);
PointCount count_y2_quad_rational(const Extension& ext, Elem A, Elem B, Elem C, Elem a, Elem b, Elem c);
std::pair<PointCount, PointCount> count_y3_linear_quad(const Extension& ext, Elem a, Elem A, Elem B, Elem C);
PointCount count_y3_cubic(const Extension& ext, Elem a, Elem b);
PointCount count_y3_sextic(const Extension& ext, Elem a, Elem b);
PointCount count_y4_quartic_even(const Extension& ext, Elem a, Elem b, Elem c);

/// Projective count of the auxiliary curve z^2 = a'y^{2i} + b'y^i + c' from
/// the quartic-pair relation, with a' = b^2 - 4ac, b' = 4Ac + 4Ca - 2Bb,
/// c' = B^2 - 4AC, counting delta points at infinity. Closed form for i <= 2,
/// enumeration for i = 3, 4.
std::int64_t quartic_pair_auxiliary_count(const Extension& ext, unsigned i, Elem A, Elem B, Elem C, Elem a,
                                          Elem b, Elem c);

/// Dispatch on spec.tag.
PointCount closed_form_count(const FamilySpec& spec, const Extension& ext);

}  // namespace fqcount
