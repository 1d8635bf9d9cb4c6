#include "fqcount/charsums.hpp"

#include "fqcount/characters.hpp"
#include "fqcount/error.hpp"
#include "fqcount/frobenius.hpp"
#include "fqcount/poly.hpp"

namespace fqcount {

Elem discriminant_cubic(const FieldCtx& F, const Cubic& f) {
  if (f.a == F.zero()) throw InvalidArgument("cubic leading coefficient must be nonzero");
  const auto [a, b, c, d] = f;
  auto k = [&](std::int64_t v) { return F.from_int(v); };
  auto m = [&](std::initializer_list<Elem> xs) {
    Elem r = F.one();
    for (Elem x : xs) r = F.mul(r, x);
    return r;
  };
  Elem r = m({k(18), a, b, c, d});
  r = F.sub(r, m({k(4), b, b, b, d}));
  r = F.add(r, m({b, b, c, c}));
  r = F.sub(r, m({k(4), a, c, c, c}));
  r = F.sub(r, m({k(27), a, a, d, d}));
  return r;
}

RootProfile root_profile(const FieldCtx& F, const Cubic& f) {
  if (discriminant_cubic(F, f) != F.zero()) return {};
  if (F.characteristic() == 3)
    throw PreconditionError("repeated-root analysis is not supported in characteristic 3");
  const poly::Poly p{f.d, f.c, f.b, f.a};
  const auto g = poly::gcd(F, p, poly::derivative(F, p));
  RootProfile out;
  if (poly::degree(g) == 2) {
    out.delta_prime = 3;
    out.double_root = F.neg(F.div(g[1], F.from_int(2)));
    return out;
  }
  // g = x - a1, and the roots sum to -b/a.
  const Elem a1 = F.neg(g[0]);
  const Elem a2 = F.sub(F.neg(F.div(f.b, f.a)), F.add(a1, a1));
  out.delta_prime = 2;
  out.double_root = a1;
  out.simple_root = a2;
  out.alpha = F.mul(f.a, F.sub(a1, a2));
  return out;
}

Cubic shift_cubic(const FieldCtx& F, const Cubic& f, Elem e) {
  const Elem three = F.from_int(3), two = F.from_int(2);
  const Elem e2 = F.mul(e, e), e3 = F.mul(e2, e);
  Cubic g;
  g.a = f.a;
  g.b = F.add(f.b, F.mul(three, F.mul(f.a, e)));
  g.c = F.add(F.add(f.c, F.mul(two, F.mul(f.b, e))), F.mul(three, F.mul(f.a, e2)));
  g.d = F.add(F.add(f.d, F.mul(f.c, e)), F.add(F.mul(f.b, e2), F.mul(f.a, e3)));
  return g;
}

namespace {

int chi2(const Extension& ext, Elem base_value) { return quadratic_char(ext.field(), ext.lift(base_value)); }

std::int64_t minus_sn(const Extension& ext, const Cubic& f) {
  return -s_n(trace_general(ext.base(), f.a, f.b, f.c, f.d), ext.degree());
}

}  // namespace

std::int64_t quad_sum_quadratic(const Extension& ext, Elem a, Elem b, Elem c) {
  const FieldCtx& F = ext.base();
  if (a == F.zero()) throw InvalidArgument("quadratic leading coefficient must be nonzero");
  const Elem disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), F.mul(a, c)));
  if (disc != F.zero()) return -chi2(ext, a);
  return (static_cast<std::int64_t>(ext.size()) - 1) * chi2(ext, a);
}

std::int64_t quad_sum_cubic(const Extension& ext, const Cubic& f) {
  const auto prof = root_profile(ext.base(), f);
  switch (prof.delta_prime) {
    case 1: return minus_sn(ext, f);
    case 2: return -chi2(ext, *prof.alpha);
    default: return 0;
  }
}

std::int64_t quad_sum_cubic_times_x(const Extension& ext, const Cubic& f) {
  const FieldCtx& F = ext.base();
  if (f.a == F.zero() || f.d == F.zero()) throw InvalidArgument("need a != 0 and d != 0");
  const auto prof = root_profile(F, f);
  const Cubic r = f.reversed();
  switch (prof.delta_prime) {
    case 1: return minus_sn(ext, r) - chi2(ext, f.a);
    case 2: return -chi2(ext, *root_profile(F, r).alpha) - chi2(ext, f.a);
    default: return -chi2(ext, f.a);
  }
}

std::int64_t quartic_char_pair_sum(const Extension& ext, Elem a, Elem b, Elem c) {
  const FieldCtx& F = ext.base();
  if (F.size() % 4 != 1) throw PreconditionError("needs q = 1 mod 4");
  if (a == F.zero()) throw InvalidArgument("quadratic leading coefficient must be nonzero");
  const Elem disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), F.mul(a, c)));
  if (disc == F.zero()) return 0;
  const Elem d = F.div(disc, F.mul(F.from_int(4), F.mul(a, a)));
  return minus_sn(ext, {F.inv(a), F.zero(), d, F.zero()});
}

}  // namespace fqcount
