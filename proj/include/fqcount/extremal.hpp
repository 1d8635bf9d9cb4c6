#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "fqcount/field.hpp"
#include "fqcount/oracle.hpp"

namespace fqcount {

/// [q^n + 1 - floor(2g sqrt(q^n)), q^n + 1 + floor(2g sqrt(q^n))], exact.
std::pair<std::int64_t, std::int64_t> hasse_weil_interval(std::uint64_t q, unsigned n, unsigned g);

/// a X^d + b Y^d + c Z^d = 0 with d in {3, 4} and a, b, c nonzero in the base
/// field (a prime field, unless certify is run in experimental mode).
struct PlaneFermatLike {
  unsigned degree = 3;
  FieldCtx base;
  Elem a, b, c;

  /// Throws InvalidArgument for a bad degree or zero coefficient, and
  /// PreconditionError for degree 3 in characteristic 3.
  PlaneFermatLike(unsigned degree, FieldCtx base, Elem a, Elem b, Elem c);
  unsigned genus() const noexcept { return degree == 3 ? 1 : 3; }
};

enum class ExtremalKind { Maximal, Minimal, Neither };
std::string_view to_string(ExtremalKind k);

struct ExtremalVerdict {
  ExtremalKind kind = ExtremalKind::Neither;
  std::uint64_t p = 0;
  unsigned field_degree = 0;  // the count is over F_{p^field_degree} = F_{p^{2n}}
};

/// Verdict over F_{p^{2n}} from the divisibility criteria. Only (p, n, d)
/// matter; the coefficients enter through validation. Requires a prime base.
ExtremalVerdict classify_cubic(const PlaneFermatLike& curve, unsigned n);
ExtremalVerdict classify_quartic(const PlaneFermatLike& curve, unsigned n);
ExtremalVerdict classify(const PlaneFermatLike& curve, unsigned n);

struct Certificate {
  ExtremalVerdict verdict;
  std::int64_t count = 0;  // projective points over F_{q^{2n}}
  std::int64_t lo = 0, hi = 0;
  bool experimental = false;  // base field was not prime
};

/// Counts the projective points over F_{q^{2n}} through the representatives
/// (x, y, 1), (x, 1, 0), (1, 0, 0) and reads the verdict off the Hasse-Weil
/// interval. A non-prime base is refused unless experimental is set, in which
/// case the counts are reported as they come.
Certificate certify(const PlaneFermatLike& curve, unsigned n, bool experimental = false,
                    const OracleOptions& opts = {});

}  // namespace fqcount
