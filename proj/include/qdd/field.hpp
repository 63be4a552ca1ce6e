#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qdd/rng.hpp"

namespace qdd {

using i64 = std::int64_t;

// element of F_{p^m}: coefficient vector of the residue class, ascending
// powers, length m, every entry reduced to [0, p)
struct FieldElem {
  std::vector<i64> c;
  bool operator==(const FieldElem&) const = default;
};

// F_{p^m} = F_p[x]/(f), f monic irreducible of degree m. Immutable after
// construction; all arithmetic goes through the context.
class FieldCtx {
 public:
  // smallest field of characteristic p containing a primitive t-th root of
  // unity: m = multiplicative order of p mod t. Requires p an odd prime,
  // gcd(p, t) = 1.
  static FieldCtx make(i64 p, i64 t);
  static FieldCtx prime_field(i64 p);
  // deterministic degree-m extension: modulus is the first monic irreducible
  // of degree m in the base-p code order of its non-leading coefficients
  static FieldCtx extension_field(i64 p, int m);
  // reconstruct from serialized data; verifies irreducibility unless told not to
  static FieldCtx with_modulus(i64 p, std::vector<i64> modulus_ascending);

  i64 p() const { return p_; }
  int m() const { return m_; }
  // p^m; construction rejects fields whose order does not fit in int64
  i64 order() const { return order_; }
  // modulus coefficients, ascending, length m+1, monic
  const std::vector<i64>& modulus() const { return modulus_; }
  std::string label() const;  // "F_3", "F_9", ...

  bool same_field(const FieldCtx& o) const {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(i64 v) const;        // image of the integer v
  FieldElem from_code(i64 code) const;    // base-p digits of code, 0 <= code < p^m
  i64 code(const FieldElem& x) const;     // inverse of from_code
  bool is_zero(const FieldElem& x) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;  // error on 0
  FieldElem pow(const FieldElem& a, i64 e) const;  // e may be negative

  // x^p (m applications give the identity)
  FieldElem frobenius(const FieldElem& x) const;

  // multiplicative order; only valid for nonzero x, scans at most order()-1
  // steps so callers keep it to small fields
  i64 mult_order(const FieldElem& x) const;
  // ord(x) == t exactly, via the prime factorization of t (works for any field size)
  bool has_exact_order(const FieldElem& x, i64 t) const;

  // smallest element of exact multiplicative order t (code order) when the
  // field is small enough to scan; otherwise the first alpha (code order)
  // whose power alpha^((p^m-1)/t) has exact order t. Requires t | p^m - 1.
  FieldElem primitive_root_of_unity(i64 t) const;

  FieldElem random(Rng& rng) const;

  // --- raw-limb interface used by the matrix kernels ---
  // every entry occupies m consecutive int64 limbs, reduced mod p
  void raw_add(const i64* a, const i64* b, i64* out) const;
  void raw_sub(const i64* a, const i64* b, i64* out) const;
  void raw_neg(const i64* a, i64* out) const;
  // scratch must hold 2m-1 limbs; out may alias neither input
  void raw_mul(const i64* a, const i64* b, i64* out, i64* scratch) const;
  // reduce an unreduced convolution (2m-1 limbs of unbounded int64) into m limbs
  void raw_reduce(i64* conv, i64* out) const;
  bool raw_is_zero(const i64* a) const;

  // largest number of (p-1)^2 products an int64 accumulator can hold
  i64 safe_accum_terms() const { return safe_terms_; }

 private:
  FieldCtx() = default;
  void finish_init();  // computes order_, red_, safe_terms_

  i64 p_ = 0;
  int m_ = 0;
  i64 order_ = 0;
  i64 safe_terms_ = 0;
  std::vector<i64> modulus_;            // ascending, length m+1
  std::vector<std::vector<i64>> red_;   // red_[d] = x^{m+d} mod f, d = 0..m-2
};

using Fq = std::shared_ptr<const FieldCtx>;

inline Fq make_field(i64 p, i64 t) {
  return std::make_shared<FieldCtx>(FieldCtx::make(p, t));
}

// total order on field elements compatible with from_code (digit-reverse lex)
bool code_less(const FieldElem& a, const FieldElem& b);

bool is_prime(i64 v);
// multiplicative order of a mod t (t >= 1, gcd(a, t) = 1); ord_1(a) = 1
i64 order_mod(i64 a, i64 t);

}  // namespace qdd
