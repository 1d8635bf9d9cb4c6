#include <doctest.h>

#include <random>
#include <string>

#include "brute.hpp"
#include "fqcount/error.hpp"
#include "fqcount/families.hpp"
#include "fqcount/oracle.hpp"

using namespace fqcount;

namespace {

FamilySpec spec_of(const FieldCtx& F, FamilyTag tag, std::vector<std::int64_t> v, unsigned order = 2,
                   unsigned curve = 1) {
  FamilySpec s{tag, {}, order, curve};
  for (auto x : v) s.coeffs.push_back(F.from_int(x));
  return s;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (FamilyTag t : kAllFamilies) {
    CHECK(family_from_name(family_name(t)) == t);
    CHECK(family_arity(t) >= 2);
  }
  CHECK_FALSE(family_from_name("y5-whatever"));
  CHECK(family_arity(FamilyTag::Y2CubicLinear) == 5);
  CHECK(family_arity(FamilyTag::QuarticPairC1) == 6);
  CHECK(family_uses_order(FamilyTag::QuarticPairC2));
  CHECK(family_has_curve_selector(FamilyTag::Y3LinearQuad));
}

TEST_CASE("y^2 = (x^3 + x^2 - x + 1)(x + 1) over F_73") {
  const auto F = FieldCtx::make(73);
  const Extension ext(F, 1);
  const auto s = spec_of(F, FamilyTag::Y2CubicLinear, {1, 1, -1, 1, 1});
  CHECK(closed_form_count(s, ext).value == 57);
  CHECK(count_total(s, ext).value == 57);
  // the tuple (2, 0, -2, 1) used for the trace, read as a curve of its own
  const auto r = spec_of(F, FamilyTag::Y2Cubic, {2, 0, -2, 1});
  CHECK(closed_form_count(r, ext).value == 73 + 1 - 16);
  CHECK(count_total(r, ext).value == 58);
}

TEST_CASE("quadratic pair: the degenerate branch is unreachable") {
  // For coprime quadratics, b'^2 - 4a'c' = 16 Res(f, g), so with c' != 0 the
  // cubic a'x^3 + b'x^2 + c'x never has a repeated root.
  for (std::uint64_t p : {5, 7}) {
    const auto F = FieldCtx::make(p);
    const Extension ext(F, 2);  // quadratics split over F_{p^2}
    const FieldCtx& K = ext.field();
    std::size_t admissible = 0;
    for (std::uint32_t idx = 0; idx < p * p * p * p * p * p; ++idx) {
      std::uint32_t t = idx;
      std::vector<Elem> c(6);
      for (auto& e : c) {
        e = Elem{t % static_cast<std::uint32_t>(p)};
        t /= static_cast<std::uint32_t>(p);
      }
      const Elem A = c[0], B = c[1], C = c[2], a = c[3], b = c[4], cc = c[5];
      if (A == F.zero() || a == F.zero()) continue;
      bool common = false;
      for (Elem x : K.elements())
        common = common || (brute::horner(K, {ext.lift(a), ext.lift(b), ext.lift(cc)}, x) == K.zero() &&
                            brute::horner(K, {ext.lift(A), ext.lift(B), ext.lift(C)}, x) == K.zero());
      const Elem four = F.from_int(4);
      const Elem ap = F.sub(F.mul(b, b), F.mul(four, F.mul(a, cc)));
      const Elem bp = F.sub(F.add(F.mul(four, F.mul(A, cc)), F.mul(four, F.mul(C, a))), F.mul(F.from_int(2), F.mul(B, b)));
      const Elem cp = F.sub(F.mul(B, B), F.mul(four, F.mul(A, C)));
      const Elem lhs = F.sub(F.mul(bp, bp), F.mul(four, F.mul(ap, cp)));
      CHECK((lhs == F.zero()) == common);
      const FamilySpec s{FamilyTag::Y2QuadProduct, c, 2, 1};
      if (admissibility_error(s, Extension(F, 1)).empty()) {
        ++admissible;
        CHECK_FALSE(common);
        CHECK(lhs != F.zero());
      }
    }
    CHECK(admissible > 0);
  }
}

TEST_CASE("hypotheses are named") {
  const auto F = FieldCtx::make(7);
  const Extension ext(F, 1);
  auto message = [&](FamilySpec s) { return admissibility_error(s, ext); };
  CHECK(message(spec_of(F, FamilyTag::Y2Cubic, {1, 0, 0, 0})).find("discriminant") != std::string::npos);
  CHECK(message(spec_of(F, FamilyTag::Y2QuarticEven, {0, 1, 1})).find("a != 0") != std::string::npos);
  CHECK(message(spec_of(F, FamilyTag::Y2QuadProduct, {1, 0, -1, 1, 0, -1})).find("common root") !=
        std::string::npos);
  CHECK(message(spec_of(F, FamilyTag::Y3Cubic, {1, 1})).empty());
  const auto F5 = FieldCtx::make(5);
  CHECK(admissibility_error(spec_of(F5, FamilyTag::Y3Cubic, {1, 1}), Extension(F5, 2)).find("q = 1 mod 3") !=
        std::string::npos);
  const auto F3 = FieldCtx::make(3);
  CHECK(admissibility_error(spec_of(F3, FamilyTag::Y2SexticEven, {1, 0, 0, 1}), Extension(F3, 1)).find("p != 3") !=
        std::string::npos);
  CHECK_THROWS_AS(validate(spec_of(F, FamilyTag::Y3Cubic, {1, 1, 1}), ext), InvalidArgument);
  CHECK_THROWS_AS(validate(spec_of(F, FamilyTag::Y3LinearQuad, {1, 1, 0, 1}, 2, 3), ext), InvalidArgument);
  CHECK_THROWS_AS(validate(spec_of(F, FamilyTag::Y2Cubic, {1, 0, 0, 0}), ext), PreconditionError);
  try {
    validate(spec_of(F, FamilyTag::Y2Cubic, {1, 0, 0, 0}), ext);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).rfind("hypothesis violated: ", 0) == 0);
  }
  CHECK_THROWS_AS(count_y3_cubic(ext, F.zero(), F.one()), PreconditionError);
}

TEST_CASE("y^4 = a x^4 with 4 | q^n - 1 counts the whole line x = 0 fibre") {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {13, 1}, {7, 2}, {3, 2}, {5, 2}}) {
    const auto F = FieldCtx::make(p);
    const Extension ext(F, n);
    const auto fib = brute::power_fibers(ext.field(), 4);
    for (Elem a : F.elements()) {
      if (a == F.zero()) continue;
      const auto s = FamilySpec{FamilyTag::Y4QuarticEven, {a, F.zero(), F.zero()}, 2, 1};
      const std::int64_t Q = static_cast<std::int64_t>(ext.size());
      CHECK(closed_form_count(s, ext).value == 1 + Q * fib[ext.lift(a).code]);
      CHECK(count_total(s, ext).value == 1 + Q * fib[ext.lift(a).code]);
    }
  }
}

TEST_CASE("dispatcher matches the direct closed forms") {
  const auto F = FieldCtx::make(13);
  const Extension ext(F, 1);
  const Elem a = F.from_int(2), b = F.from_int(3), c = F.from_int(5), d = F.from_int(7);
  CHECK(closed_form_count({FamilyTag::Y2SexticEven, {a, b, c, d}, 2, 1}, ext) == count_y2_sextic_even(ext, a, b, c, d));
  CHECK(closed_form_count({FamilyTag::Y3Sextic, {a, b}, 2, 1}, ext) == count_y3_sextic(ext, a, b));
  const auto pr = count_y3_linear_quad(ext, a, F.one(), b, c);
  CHECK(closed_form_count({FamilyTag::Y3LinearQuad, {a, F.one(), b, c}, 2, 1}, ext) == pr.first);
  CHECK(closed_form_count({FamilyTag::Y3LinearQuad, {a, F.one(), b, c}, 2, 2}, ext) == pr.second);
  const auto qp = count_quartic_pair(ext, 3, F.one(), b, c, a, F.zero(), d);
  CHECK(closed_form_count({FamilyTag::QuarticPairC1, {F.one(), b, c, a, F.zero(), d}, 3, 1}, ext) == qp.first);
  CHECK(closed_form_count({FamilyTag::QuarticPairC2, {F.one(), b, c, a, F.zero(), d}, 3, 1}, ext) == qp.second);
}

TEST_CASE("random admissible members over larger fields agree with enumeration") {
  std::mt19937 rng(11);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{11, 1}, {17, 1}, {3, 2}, {5, 2}}) {
    const auto F = FieldCtx::make(p, k);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.size() - 1));
    for (unsigned n : {1u, 2u}) {
      const Extension ext(F, n);
      for (FamilyTag tag : kAllFamilies) {
        int found = 0;
        for (int attempt = 0; attempt < 400 && found < 8; ++attempt) {
          FamilySpec s{tag, {}, 2, 1};
          for (std::size_t t = 0; t < family_arity(tag); ++t) s.coeffs.push_back(Elem{pick(rng)});
          if (family_uses_order(tag)) s.order = 1 + attempt % 4;
          if (family_has_curve_selector(tag)) s.curve = 1 + attempt % 2;
          if (!admissibility_error(s, ext).empty()) continue;
          ++found;
          CAPTURE(family_name(tag));
          CAPTURE(F.size());
          CAPTURE(n);
          CHECK(closed_form_count(s, ext).value == count_total(s, ext).value);
        }
      }
    }
  }
}
