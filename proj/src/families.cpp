#include "fqcount/families.hpp"

#include <array>

#include "fqcount/characters.hpp"
#include "fqcount/charsums.hpp"
#include "fqcount/error.hpp"

namespace fqcount {

namespace {

struct FamilyInfo {
  FamilyTag tag;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<FamilyInfo, 12> kInfo{{
    {FamilyTag::Y2Cubic, "y2-cubic", 4},
    {FamilyTag::Y2CubicLinear, "y2-cubic-linear", 5},
    {FamilyTag::Y2SexticEven, "y2-sextic-even", 4},
    {FamilyTag::Y2QuarticEven, "y2-quartic-even", 3},
    {FamilyTag::QuarticPairC1, "quartic-pair-c1", 6},
    {FamilyTag::QuarticPairC2, "quartic-pair-c2", 6},
    {FamilyTag::Y2QuadProduct, "y2-quad-product", 6},
    {FamilyTag::Y2QuadRational, "y2-quad-rational", 6},
    {FamilyTag::Y3LinearQuad, "y3-linear-quad", 4},
    {FamilyTag::Y3Cubic, "y3-cubic", 2},
    {FamilyTag::Y3Sextic, "y3-sextic", 2},
    {FamilyTag::Y4QuarticEven, "y4-quartic-even", 3},
}};

const FamilyInfo& info(FamilyTag tag) {
  for (const auto& i : kInfo)
    if (i.tag == tag) return i;
  throw InvalidArgument("unknown family tag");
}

// Shorthand for arithmetic in the base field and characters on F_{q^n}.
struct Ctx {
  const Extension& ext;
  const FieldCtx& F;
  std::int64_t Q;  // q^n

  explicit Ctx(const Extension& e) : ext(e), F(e.base()), Q(checked_pow(e.base().size(), e.degree())) {}

  Elem k(std::int64_t v) const { return F.from_int(v); }
  Elem mul(Elem x, Elem y) const { return F.mul(x, y); }
  Elem add(Elem x, Elem y) const { return F.add(x, y); }
  Elem sub(Elem x, Elem y) const { return F.sub(x, y); }
  Elem div(Elem x, Elem y) const { return F.div(x, y); }
  bool zero(Elem x) const { return x == F.zero(); }
  // b^2 - 4ac
  Elem disc2(Elem a, Elem b, Elem c) const { return sub(mul(b, b), mul(k(4), mul(a, c))); }

  int chi2(Elem x) const { return quadratic_char(ext.field(), ext.lift(x)); }
  // sum_{j=1}^{i-1} chi_i^j(x) on F_{q^n}
  std::int64_t chi_sum(unsigned i, Elem x) const { return nontrivial_power_sum(ext.field(), i, ext.lift(x)); }
  std::int64_t sn(Elem a, Elem b, Elem c, Elem d) const {
    return s_n(trace_general(F, a, b, c, d), ext.degree());
  }
};

void require(bool ok, const char* hypothesis) {
  if (!ok) throw PreconditionError(std::string("hypothesis violated: ") + hypothesis);
}

// Res(ax^2 + bx + c, Ax^2 + Bx + C) = (aC - cA)^2 - (aB - bA)(bC - cB).
Elem quad_resultant(const Ctx& x, Elem A, Elem B, Elem C, Elem a, Elem b, Elem c) {
  const Elem u = x.sub(x.mul(a, C), x.mul(c, A));
  const Elem v = x.sub(x.mul(a, B), x.mul(b, A));
  const Elem w = x.sub(x.mul(b, C), x.mul(c, B));
  return x.sub(x.mul(u, u), x.mul(v, w));
}

void check_quad_pair(const Ctx& x, Elem A, Elem B, Elem C, Elem a, Elem b, Elem c) {
  require(!x.zero(A), "A != 0");
  require(!x.zero(a), "a != 0");
  require(!x.zero(quad_resultant(x, A, B, C, a, b, c)), "ax^2+bx+c and Ax^2+Bx+C have no common root");
}

bool y4_theorem_path(const FieldCtx& F) { return F.size() % 4 == 1; }

// Coefficients a', b', c' of the discriminant in y^i shared by the quadratic
// pair results.
std::array<Elem, 3> pair_primes(const Ctx& x, Elem A, Elem B, Elem C, Elem a, Elem b, Elem c) {
  const Elem ap = x.disc2(a, b, c);
  const Elem bp = x.sub(x.add(x.mul(x.k(4), x.mul(A, c)), x.mul(x.k(4), x.mul(C, a))), x.mul(x.k(2), x.mul(B, b)));
  const Elem cp = x.disc2(A, B, C);
  return {ap, bp, cp};
}

int chi2_alpha(const Ctx& x, const Cubic& f) {
  const auto prof = root_profile(x.F, f);
  return prof.alpha ? x.chi2(*prof.alpha) : 0;
}

}  // namespace

std::string_view family_name(FamilyTag tag) { return info(tag).name; }

std::optional<FamilyTag> family_from_name(std::string_view name) {
  for (const auto& i : kInfo)
    if (i.name == name) return i.tag;
  return std::nullopt;
}

std::size_t family_arity(FamilyTag tag) { return info(tag).arity; }

bool family_uses_order(FamilyTag tag) { return tag == FamilyTag::QuarticPairC1 || tag == FamilyTag::QuarticPairC2; }
bool family_has_curve_selector(FamilyTag tag) { return tag == FamilyTag::Y3LinearQuad; }

void validate(const FamilySpec& spec, const Extension& ext) {
  if (spec.coeffs.size() != family_arity(spec.tag))
    throw InvalidArgument(std::string(family_name(spec.tag)) + " takes " +
                          std::to_string(family_arity(spec.tag)) + " coefficients, got " +
                          std::to_string(spec.coeffs.size()));
  for (Elem e : spec.coeffs)
    if (e.code >= ext.base().size()) throw InvalidArgument("coefficient outside the base field");
  const Ctx x(ext);
  const auto& v = spec.coeffs;
  const FieldCtx& F = ext.base();
  switch (spec.tag) {
    case FamilyTag::Y2Cubic:
      require(!x.zero(v[0]), "a != 0");
      require(!x.zero(discriminant_cubic(F, {v[0], v[1], v[2], v[3]})), "distinct roots (discriminant != 0)");
      break;
    case FamilyTag::Y2CubicLinear: {
      require(!x.zero(v[0]), "a != 0");
      const Cubic s = shift_cubic(F, {v[0], v[1], v[2], v[3]}, F.neg(v[4]));
      if (F.characteristic() == 3 && !x.zero(s.d))
        require(!x.zero(discriminant_cubic(F, s)), "p != 3 when the shifted cubic has a repeated root");
      break;
    }
    case FamilyTag::Y2SexticEven:
      require(!x.zero(v[0]), "a != 0");
      if (F.characteristic() == 3)
        require(!x.zero(discriminant_cubic(F, {v[0], v[1], v[2], v[3]})), "p != 3 when the cubic has a repeated root");
      break;
    case FamilyTag::Y2QuarticEven:
      require(!x.zero(v[0]), "a != 0");
      break;
    case FamilyTag::QuarticPairC1:
    case FamilyTag::QuarticPairC2:
      if (spec.order < 1 || spec.order > 4) throw InvalidArgument("character order i must be 1..4");
      require((x.Q - 1) % spec.order == 0, "i divides q^n - 1");
      check_quad_pair(x, v[0], v[1], v[2], v[3], v[4], v[5]);
      break;
    case FamilyTag::Y2QuadProduct:
    case FamilyTag::Y2QuadRational:
      check_quad_pair(x, v[0], v[1], v[2], v[3], v[4], v[5]);
      require(!x.zero(x.disc2(v[3], v[4], v[5])), "b^2 - 4ac != 0");
      require(!x.zero(x.disc2(v[0], v[1], v[2])), "B^2 - 4AC != 0");
      break;
    case FamilyTag::Y3LinearQuad: {
      if (spec.curve != 1 && spec.curve != 2) throw InvalidArgument("curve selector must be 1 or 2");
      require(F.size() % 3 == 1, "q = 1 mod 3");
      require(!x.zero(v[1]), "A != 0");
      const Elem at_root = x.add(x.sub(x.mul(v[1], x.mul(v[0], v[0])), x.mul(v[2], v[0])), v[3]);
      require(!x.zero(at_root), "Aa^2 - Ba + C != 0");
      break;
    }
    case FamilyTag::Y3Cubic:
    case FamilyTag::Y3Sextic:
      require(F.size() % 3 == 1, "q = 1 mod 3");
      require(!x.zero(v[0]), "a != 0");
      require(!x.zero(v[1]), "b != 0");
      break;
    case FamilyTag::Y4QuarticEven:
      require(!x.zero(v[0]), "a != 0");
      require(y4_theorem_path(F) || (F.degree() == 1 && F.characteristic() % 4 == 3),
              "q = 1 mod 4, or q = p prime with p = 3 mod 4");
      break;
  }
}

std::string admissibility_error(const FamilySpec& spec, const Extension& ext) {
  try {
    validate(spec, ext);
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

PointCount count_y2_cubic(const Extension& ext, Elem a, Elem b, Elem c, Elem d) {
  validate({FamilyTag::Y2Cubic, {a, b, c, d}}, ext);
  return count_elliptic(ext.base(), a, b, c, d, ext.degree());
}

PointCount count_y2_cubic_linear(const Extension& ext, Elem a, Elem b, Elem c, Elem d, Elem e) {
  validate({FamilyTag::Y2CubicLinear, {a, b, c, d, e}}, ext);
  const Ctx x(ext);
  const Cubic s = shift_cubic(x.F, {a, b, c, d}, x.F.neg(e));  // (a', b', c', d')
  const unsigned n = ext.degree();
  if (!x.zero(s.d)) return {n, x.Q + 1 + quad_sum_cubic_times_x(ext, s)};
  if (!x.zero(x.disc2(s.a, s.b, s.c))) return {n, x.Q + 1 - x.chi2(s.a) - x.chi2(s.c)};
  return {n, x.Q + 1 + (x.Q - 1) * x.chi2(s.a) - x.chi2(s.c)};
}

PointCount count_y2_sextic_even(const Extension& ext, Elem a, Elem b, Elem c, Elem d) {
  validate({FamilyTag::Y2SexticEven, {a, b, c, d}}, ext);
  const Ctx x(ext);
  const unsigned n = ext.degree();
  const Cubic f{a, b, c, d};
  if (!x.zero(d)) {
    const auto prof = root_profile(x.F, f);
    switch (prof.delta_prime) {
      case 1: return {n, x.Q + 1 - x.sn(a, b, c, d) - x.sn(d, c, b, a) - x.chi2(a)};
      case 2: return {n, x.Q + 1 - x.chi2(*prof.alpha) - chi2_alpha(x, f.reversed()) - x.chi2(a)};
      default: return {n, x.Q + 1 - x.chi2(a)};
    }
  }
  const Elem D = x.disc2(a, b, c);
  // Cases are tried in a fixed order; a missing alpha (triple root)
  // contributes chi(alpha) = 0.
  if (!x.zero(c) && !x.zero(D)) return {n, x.Q + 1 - x.sn(a, b, c, d) - x.chi2(a) - x.chi2(c)};
  if (x.zero(D)) return {n, x.Q + 1 - chi2_alpha(x, f) + (x.Q - 1) * x.chi2(a) - x.chi2(c)};
  return {n, x.Q + 1 - chi2_alpha(x, f) - x.chi2(a) - x.chi2(c)};
}

PointCount count_y2_quartic_even(const Extension& ext, Elem a, Elem b, Elem c) {
  validate({FamilyTag::Y2QuarticEven, {a, b, c}}, ext);
  const Ctx x(ext);
  const unsigned n = ext.degree();
  const Elem D = x.disc2(a, b, c);
  if (!x.zero(D) && !x.zero(c)) return {n, x.Q + 1 - x.sn(a, b, c, x.F.zero()) - x.chi2(a)};
  if (!x.zero(D)) return {n, x.Q + 1 - x.chi2(b) - x.chi2(a)};
  if (!x.zero(c)) return {n, x.Q + 1 - x.chi2(x.F.neg(x.div(b, x.k(2)))) + (x.Q - 1) * x.chi2(a)};
  return {n, x.Q + 1 + (x.Q - 1) * x.chi2(a)};
}

namespace {

std::int64_t pair_delta(const Ctx& x, unsigned i, Elem ap, Elem bp) {
  if (i == 1) return 1 + x.chi2(ap);
  if (i == 2 && x.zero(ap)) return 1 + x.chi2(bp);
  return 1;
}

}  // namespace

std::int64_t quartic_pair_auxiliary_count(const Extension& ext, unsigned i, Elem A, Elem B, Elem C, Elem a,
                                          Elem b, Elem c) {
  const Ctx x(ext);
  const auto [ap, bp, cp] = pair_primes(x, A, B, C, a, b, c);
  const std::int64_t delta = pair_delta(x, i, ap, bp);
  if (i == 1) {
    // z^2 = a'y^2 + b'y + c'
    if (!x.zero(ap)) return x.Q + quad_sum_quadratic(ext, ap, bp, cp) + delta;
    return x.Q + (x.zero(bp) ? x.Q * x.chi2(cp) : 0) + delta;
  }
  if (i == 2) {
    // z^2 = a'y^4 + b'y^2 + c'
    if (!x.zero(ap)) return count_y2_quartic_even(ext, ap, bp, cp).value;
    return x.Q + (x.zero(bp) ? x.Q * x.chi2(cp) : quad_sum_quadratic(ext, bp, x.F.zero(), cp)) + delta;
  }
  // No closed form here: enumerate y and count square roots of the right side.
  const FieldCtx& E = ext.field();
  const Elem la = ext.lift(ap), lb = ext.lift(bp), lc = ext.lift(cp);
  std::int64_t total = 0;
  for (Elem y : E.elements()) {
    const Elem u = E.pow(y, i);
    const Elem v = E.add(E.mul(E.add(E.mul(la, u), lb), u), lc);
    total += 1 + quadratic_char(E, v);
  }
  return total + delta;
}

std::pair<PointCount, PointCount> count_quartic_pair(const Extension& ext, unsigned i, Elem A, Elem B, Elem C,
                                                     Elem a, Elem b, Elem c) {
  validate({FamilyTag::QuarticPairC1, {A, B, C, a, b, c}, i}, ext);
  const Ctx x(ext);
  const auto [ap, bp, cp] = pair_primes(x, A, B, C, a, b, c);
  const std::int64_t NC = quartic_pair_auxiliary_count(ext, i, A, B, C, a, b, c);
  const std::int64_t sigma = i == 1 ? 0 : x.chi_sum(i, x.div(A, a));
  const std::int64_t delta = pair_delta(x, i, ap, bp);
  // Roots of ax^2 + bx + c in F_{q^n}: one if double, two if the
  // discriminant is a nonzero square.
  const std::int64_t gamma = x.zero(ap) ? 1 : (x.chi2(ap) == 1 ? 2 : 0);
  const unsigned n = ext.degree();
  return {{n, NC - sigma - delta + gamma}, {n, NC + 1 - sigma - delta}};
}

PointCount count_y2_quad_product(const Extension& ext, Elem A, Elem B, Elem C, Elem a, Elem b, Elem c) {
  validate({FamilyTag::Y2QuadProduct, {A, B, C, a, b, c}}, ext);
  const Ctx x(ext);
  const auto [ap, bp, cp] = pair_primes(x, A, B, C, a, b, c);
  const unsigned n = ext.degree();
  const std::int64_t ind = x.chi2(ap) == 1 ? 1 : 0;
  const Cubic g{ap, bp, cp, x.F.zero()};
  if (!x.zero(discriminant_cubic(x.F, g)))
    return {n, x.Q + 2 * ind - x.sn(ap, bp, cp, x.F.zero()) - x.chi2(ap) - x.chi2(x.div(A, a))};
  // Unreachable under the hypotheses (b'^2 - 4a'c' is 16 times the
  // resultant); the degenerate formula is kept for completeness.
  return {n, x.Q + 2 * ind - chi2_alpha(x, g) + (x.Q - 1) * x.chi2(ap)};
}

PointCount count_y2_quad_rational(const Extension& ext, Elem A, Elem B, Elem C, Elem a, Elem b, Elem c) {
  validate({FamilyTag::Y2QuadRational, {A, B, C, a, b, c}}, ext);
  const Ctx x(ext);
  const auto [ap, bp, cp] = pair_primes(x, A, B, C, a, b, c);
  const unsigned n = ext.degree();
  const Cubic g{ap, bp, cp, x.F.zero()};
  if (!x.zero(discriminant_cubic(x.F, g)))
    return {n, x.Q + 1 - x.sn(ap, bp, cp, x.F.zero()) - x.chi2(ap) - x.chi2(x.div(A, a))};
  return {n, x.Q + 1 - chi2_alpha(x, g) + (x.Q - 1) * x.chi2(ap) - x.chi2(x.div(A, a))};
}

std::pair<PointCount, PointCount> count_y3_linear_quad(const Extension& ext, Elem a, Elem A, Elem B, Elem C) {
  validate({FamilyTag::Y3LinearQuad, {a, A, B, C}}, ext);
  const Ctx x(ext);
  const Elem ap = x.mul(x.k(4), x.add(x.sub(x.mul(A, x.mul(a, a)), x.mul(B, a)), C));
  const Elem cp = x.disc2(A, B, C);
  // When c' = 0 the cubic a'x^3 has a triple root and its character sum is 0.
  const std::int64_t N1 = x.Q + 1 + quad_sum_cubic(ext, {ap, x.F.zero(), x.F.zero(), cp});
  const unsigned n = ext.degree();
  return {{n, N1}, {n, N1 - x.chi_sum(3, A)}};
}

PointCount count_y3_cubic(const Extension& ext, Elem a, Elem b) {
  validate({FamilyTag::Y3Cubic, {a, b}}, ext);
  const Ctx x(ext);
  const Elem h = x.div(b, x.mul(x.k(2), a));
  return {ext.degree(), x.Q + 1 - x.sn(x.F.inv(a), x.F.zero(), x.F.zero(), x.mul(h, h))};
}

PointCount count_y3_sextic(const Extension& ext, Elem a, Elem b) {
  validate({FamilyTag::Y3Sextic, {a, b}}, ext);
  const Ctx x(ext);
  const Elem z = x.F.zero();
  const Elem ia = x.F.inv(a), ib = x.F.inv(b);
  const Elem m4ab = x.F.neg(x.mul(x.k(4), x.mul(a, b)));
  const std::int64_t s = x.sn(ia, z, z, x.F.neg(x.mul(b, ia))) + x.sn(ib, z, z, x.F.neg(x.mul(a, ib))) +
                         x.sn(x.F.one(), z, z, m4ab) + x.sn(m4ab, z, z, x.F.one());
  return {ext.degree(), x.Q + 1 - s - x.chi_sum(3, a)};
}

PointCount count_y4_quartic_even(const Extension& ext, Elem a, Elem b, Elem c) {
  validate({FamilyTag::Y4QuarticEven, {a, b, c}}, ext);
  const Ctx x(ext);
  const unsigned n = ext.degree();
  const FieldCtx& F = x.F;
  const Elem z = F.zero();
  const Elem D = x.disc2(a, b, c);
  const bool theorem = y4_theorem_path(F);
  if (!x.zero(D)) {
    // omega_1 and omega_2; on the p = 3 mod 4 path both are i*sqrt(p).
    const FrobeniusData supersingular{F.size(), 0};
    std::int64_t s1, s2 = 0;
    if (theorem) {
      s1 = x.sn(F.inv(a), z, x.div(D, x.mul(x.k(4), x.mul(a, a))), z);
      if (!x.zero(c)) s2 = x.sn(F.inv(c), z, x.div(D, x.mul(x.k(4), x.mul(c, c))), z);
    } else {
      s1 = s_n(supersingular, n);
      if (!x.zero(c)) s2 = s1;
    }
    if (!x.zero(c)) return {n, x.Q + 1 - s1 - s2 - x.sn(a, b, c, z)};
    return {n, x.Q + 1 - s1 - x.chi2(b)};
  }
  if (!x.zero(c)) return {n, x.Q + 1 - x.chi2(F.neg(x.div(b, x.k(2)))) + x.Q * x.chi2(a)};
  // b = c = 0: y^4 = ax^4 has 1 + q^n * #{y : y^4 = a} points. When 4 | q^n - 1
  // the fourth-root count needs chi_4 as well as chi_2.
  std::int64_t quartic = 0;
  if ((x.Q - 1) % 4 == 0) {
    const MultChar chi4(ext.field(), 4);
    quartic = (chi4(ext.lift(a)) + chi4.pow(3)(ext.lift(a))).to_integer();
  }
  return {n, x.Q + 1 - x.chi2(b) + x.Q * x.chi2(a) + x.Q * quartic};
}

PointCount closed_form_count(const FamilySpec& spec, const Extension& ext) {
  validate(spec, ext);
  const auto& v = spec.coeffs;
  switch (spec.tag) {
    case FamilyTag::Y2Cubic: return count_y2_cubic(ext, v[0], v[1], v[2], v[3]);
    case FamilyTag::Y2CubicLinear: return count_y2_cubic_linear(ext, v[0], v[1], v[2], v[3], v[4]);
    case FamilyTag::Y2SexticEven: return count_y2_sextic_even(ext, v[0], v[1], v[2], v[3]);
    case FamilyTag::Y2QuarticEven: return count_y2_quartic_even(ext, v[0], v[1], v[2]);
    case FamilyTag::QuarticPairC1: return count_quartic_pair(ext, spec.order, v[0], v[1], v[2], v[3], v[4], v[5]).first;
    case FamilyTag::QuarticPairC2: return count_quartic_pair(ext, spec.order, v[0], v[1], v[2], v[3], v[4], v[5]).second;
    case FamilyTag::Y2QuadProduct: return count_y2_quad_product(ext, v[0], v[1], v[2], v[3], v[4], v[5]);
    case FamilyTag::Y2QuadRational: return count_y2_quad_rational(ext, v[0], v[1], v[2], v[3], v[4], v[5]);
    case FamilyTag::Y3LinearQuad: {
      const auto [c1, c2] = count_y3_linear_quad(ext, v[0], v[1], v[2], v[3]);
      return spec.curve == 1 ? c1 : c2;
    }
    case FamilyTag::Y3Cubic: return count_y3_cubic(ext, v[0], v[1]);
    case FamilyTag::Y3Sextic: return count_y3_sextic(ext, v[0], v[1]);
    case FamilyTag::Y4QuarticEven: return count_y4_quartic_even(ext, v[0], v[1], v[2]);
  }
  throw InvalidArgument("unknown family tag");
}

}  // namespace fqcount
