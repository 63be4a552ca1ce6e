#pragma once
#include <vector>

#include "qdd/field.hpp"

namespace qdd {

// polynomial over F_{p^m}, ascending coefficients, no trailing zeros
// (zero polynomial = empty vector)
struct Poly {
  std::vector<FieldElem> c;
  bool operator==(const Poly&) const = default;
};

int poly_deg(const Poly& f);  // -1 for the zero polynomial
Poly poly_zero();
Poly poly_one(const FieldCtx& F);
Poly poly_x(const FieldCtx& F);
Poly poly_const(const FieldCtx& F, const FieldElem& a);
// X - a
Poly poly_linear(const FieldCtx& F, const FieldElem& a);
Poly poly_trim(Poly f, const FieldCtx& F);

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& F, const FieldElem& s, const Poly& a);
// division with remainder; divisor nonzero
std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_make_monic(const FieldCtx& F, const Poly& a);
// monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0
Poly poly_gcd(const FieldCtx& F, Poly a, Poly b);
// base^e mod f, e >= 0
Poly poly_powmod(const FieldCtx& F, Poly base, i64 e, const Poly& f);
Poly poly_pow(const FieldCtx& F, const Poly& base, i64 e);
FieldElem poly_eval(const FieldCtx& F, const Poly& f, const FieldElem& x);

// Rabin test over the ground field: deterministic, exact
bool poly_irreducible(const FieldCtx& F, const Poly& f);

// all roots of f in F, sorted by element code.
// p^m <= 10^4: direct scan of the field.
// larger fields: split gcd(f, X^{p^m} - X) by seeded equal-degree splitting.
std::vector<FieldElem> roots_in_field(const FieldCtx& F, const Poly& f);

std::string poly_to_string(const FieldCtx& F, const Poly& f);

}  // namespace qdd
