#include "fqcount/extremal.hpp"

#include "fqcount/error.hpp"
#include "fqcount/frobenius.hpp"

namespace fqcount {

std::pair<std::int64_t, std::int64_t> hasse_weil_interval(std::uint64_t q, unsigned n, unsigned g) {
  const std::int64_t Q = checked_pow(q, n);
  const auto g2 = static_cast<unsigned __int128>(g) * g;
  const unsigned __int128 v = 4 * g2 * static_cast<unsigned __int128>(Q);
  if (v >> 64) throw OverflowError("Hasse-Weil width does not fit in 64 bits");
  const auto w = static_cast<std::int64_t>(detail::isqrt(static_cast<std::uint64_t>(v)));
  return {Q + 1 - w, Q + 1 + w};
}

PlaneFermatLike::PlaneFermatLike(unsigned d, FieldCtx f, Elem x, Elem y, Elem z)
    : degree(d), base(std::move(f)), a(x), b(y), c(z) {
  if (d != 3 && d != 4) throw InvalidArgument("degree must be 3 or 4");
  if (a == base.zero() || b == base.zero() || c == base.zero())
    throw InvalidArgument("coefficients a, b, c must be nonzero");
  if (d == 3 && base.characteristic() == 3) throw PreconditionError("degree 3 needs p != 3");
}

std::string_view to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::Maximal: return "Maximal";
    case ExtremalKind::Minimal: return "Minimal";
    default: return "Neither";
  }
}

namespace {

ExtremalVerdict by_divisibility(const PlaneFermatLike& curve, unsigned n, unsigned d) {
  if (curve.degree != d) throw InvalidArgument("wrong degree for this classifier");
  if (curve.base.degree() != 1) throw PreconditionError("classification needs a prime base field");
  if (n == 0) throw InvalidArgument("n must be positive");
  const std::uint64_t p = curve.base.characteristic();
  // p^n mod d
  std::uint64_t r = 1;
  for (unsigned k = 0; k < n; ++k) r = r * (p % d) % d;
  ExtremalVerdict v{ExtremalKind::Neither, p, 2 * n};
  if ((r + 1) % d == 0) v.kind = ExtremalKind::Maximal;
  else if (r == 1 && p % d == d - 1) v.kind = ExtremalKind::Minimal;
  return v;
}

}  // namespace

ExtremalVerdict classify_cubic(const PlaneFermatLike& curve, unsigned n) { return by_divisibility(curve, n, 3); }
ExtremalVerdict classify_quartic(const PlaneFermatLike& curve, unsigned n) { return by_divisibility(curve, n, 4); }
ExtremalVerdict classify(const PlaneFermatLike& curve, unsigned n) {
  return curve.degree == 3 ? classify_cubic(curve, n) : classify_quartic(curve, n);
}

Certificate certify(const PlaneFermatLike& curve, unsigned n, bool experimental, const OracleOptions& opts) {
  if (n == 0) throw InvalidArgument("n must be positive");
  const bool prime_base = curve.base.degree() == 1;
  if (!prime_base && !experimental)
    throw PreconditionError("non-prime base field needs the experimental flag");
  const FieldCtx& B = curve.base;
  // Budget is checked before the extension is built.
  const std::uint64_t q = B.size();
  unsigned __int128 Q = 1;
  for (unsigned k = 0; k < 2 * n; ++k) Q *= q;
  if (Q > FieldCtx::kMaxFieldSize || Q > opts.budget)
    throw BudgetExceeded("F_{q^" + std::to_string(2 * n) + "} is too large to enumerate");
  const Extension ext(B, 2 * n);
  const FieldCtx& E = ext.field();
  const Elem la = ext.lift(curve.a), lb = ext.lift(curve.b), lc = ext.lift(curve.c);
  const unsigned d = curve.degree;

  // (x, y, 1): b y^d = -(a x^d + c)
  AffineEquation::Poly rhs(d + 1, E.zero());
  rhs[0] = E.neg(lc);
  rhs[d] = E.neg(la);
  std::int64_t N = count_affine(AffineEquation::power_form(d, {lb}, rhs), E, opts);
  // (x, 1, 0): a x^d + b = 0
  for (Elem x : E.elements()) N += E.add(E.mul(la, E.pow(x, d)), lb) == E.zero() ? 1 : 0;
  // (1, 0, 0) lies on the curve only if a = 0, which is excluded.

  Certificate cert;
  cert.count = N;
  cert.experimental = !prime_base;
  const auto pn = checked_pow(q, n);
  const auto Qi = static_cast<std::int64_t>(Q);
  cert.lo = Qi + 1 - 2 * static_cast<std::int64_t>(curve.genus()) * pn;
  cert.hi = Qi + 1 + 2 * static_cast<std::int64_t>(curve.genus()) * pn;
  cert.verdict = {ExtremalKind::Neither, B.characteristic(), 2 * n * B.degree()};
  if (N == cert.hi) cert.verdict.kind = ExtremalKind::Maximal;
  else if (N == cert.lo) cert.verdict.kind = ExtremalKind::Minimal;
  return cert;
}

}  // namespace fqcount
