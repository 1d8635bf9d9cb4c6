// Independent reference computations for the tests: plain enumeration over
// the field using only ring operations, never the library's formulas.
#pragma once

#include <cstdint>
#include <vector>

#include "fqcount/charsums.hpp"
#include "fqcount/field.hpp"

namespace brute {

using fqcount::Elem;
using fqcount::FieldCtx;

inline bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& k) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q || d == q; ++d) {
    if (q % d) continue;
    p = d;
    k = 0;
    while (q % d == 0) {
      q /= d;
      ++k;
    }
    return q == 1;
  }
  p = q;
  k = 1;
  return true;
}

inline Elem horner(const FieldCtx& F, const std::vector<Elem>& coeffs_high_first, Elem x) {
  Elem r = F.zero();
  for (Elem c : coeffs_high_first) r = F.add(F.mul(r, x), c);
  return r;
}

inline Elem cubic_at(const FieldCtx& F, const fqcount::Cubic& f, Elem x) {
  return horner(F, {f.a, f.b, f.c, f.d}, x);
}

// Table of how many y have y^e == v, built by squaring every element.
inline std::vector<std::int64_t> power_fibers(const FieldCtx& F, std::uint64_t e) {
  std::vector<std::int64_t> n(F.size(), 0);
  for (Elem y : F.elements()) {
    Elem r = F.one();
    for (std::uint64_t k = 0; k < e; ++k) r = F.mul(r, y);
    ++n[r.code];
  }
  return n;
}

inline int is_square_sign(const FieldCtx& F, Elem x) {
  if (x == F.zero()) return 0;
  for (Elem y : F.elements())
    if (F.mul(y, y) == x) return 1;
  return -1;
}

// q - #{(x, y) : y^2 = f(x)}
inline std::int64_t trace_by_enumeration(const FieldCtx& F, const fqcount::Cubic& f) {
  const auto sq = power_fibers(F, 2);
  std::int64_t affine = 0;
  for (Elem x : F.elements()) affine += sq[cubic_at(F, f, x).code];
  return static_cast<std::int64_t>(F.size()) - affine;
}

// Projective points of y^2 = f(x) over the extension field, f over the base.
inline std::int64_t projective_y2_cubic(const fqcount::Extension& ext, const fqcount::Cubic& f) {
  const FieldCtx& K = ext.field();
  const fqcount::Cubic g{ext.lift(f.a), ext.lift(f.b), ext.lift(f.c), ext.lift(f.d)};
  std::int64_t n = 1;
  for (Elem x : K.elements()) {
    const Elem v = cubic_at(K, g, x);
    for (Elem y : K.elements())
      if (K.mul(y, y) == v) ++n;
  }
  return n;
}

}  // namespace brute
