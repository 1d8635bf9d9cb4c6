#pragma once

#include <vector>

#include "fqcount/field.hpp"

namespace fqcount::poly {

/// Dense univariate polynomial over a FieldCtx, coefficients low-to-high.
/// Canonical form has no trailing zeros; the zero polynomial is empty.
using Poly = std::vector<Elem>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for the zero polynomial

Poly add(const FieldCtx& F, const Poly& f, const Poly& g);
Poly sub(const FieldCtx& F, const Poly& f, const Poly& g);
Poly mul(const FieldCtx& F, const Poly& f, const Poly& g);
/// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<Poly, Poly> divmod(const FieldCtx& F, const Poly& f, const Poly& g);
Poly mod(const FieldCtx& F, const Poly& f, const Poly& g);
Poly monic(const FieldCtx& F, const Poly& f);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const FieldCtx& F, Poly f, Poly g);
Poly powmod(const FieldCtx& F, const Poly& base, std::uint64_t e, const Poly& m);
Poly derivative(const FieldCtx& F, const Poly& f);
Elem eval(const FieldCtx& F, const Poly& f, Elem x);

/// Rabin's test for a monic polynomial of degree >= 1.
bool is_irreducible(const FieldCtx& F, const Poly& f);

}  // namespace fqcount::poly
