#include "qdd/field.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qdd/errors.hpp"
#include "qdd/poly.hpp"

namespace qdd {

bool is_prime(i64 v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (i64 d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

i64 order_mod(i64 a, i64 t) {
  if (t < 1) throw std::invalid_argument("order_mod: t must be >= 1");
  if (t == 1) return 1;
  a %= t;
  if (a < 0) a += t;
  if (std::gcd(a, t) != 1) throw std::invalid_argument("order_mod: gcd(a, t) != 1");
  i64 x = a % t, ord = 1;
  while (x != 1) {
    x = (x * a) % t;
    ++ord;
    if (ord > t) throw std::logic_error("order_mod: runaway");
  }
  return ord;
}

namespace {

i64 checked_pow(i64 base, int e, const char* what) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (i64{1} << 62) / base) throw std::domain_error(what);
    r *= base;
  }
  return r;
}

void validate_char(i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (p == 2) throw std::invalid_argument("characteristic must be odd");
}

}  // namespace

void FieldCtx::finish_init() {
  order_ = checked_pow(p_, m_, "field order exceeds 2^62");
  const i64 prodmax = (p_ - 1) * (p_ - 1);
  safe_terms_ = (std::numeric_limits<i64>::max() / 2) / std::max<i64>(prodmax, 1);
  red_.clear();
  if (m_ >= 2) {
    // red_[0] = x^m mod f = -(c_0, ..., c_{m-1})
    std::vector<i64> row(m_);
    for (int j = 0; j < m_; ++j) row[j] = (p_ - modulus_[j]) % p_;
    red_.push_back(row);
    for (int d = 1; d <= m_ - 2; ++d) {
      const std::vector<i64>& prev = red_.back();
      std::vector<i64> nxt(m_, 0);
      i64 top = prev[m_ - 1];
      for (int j = m_ - 1; j >= 1; --j) nxt[j] = prev[j - 1];
      nxt[0] = 0;
      for (int j = 0; j < m_; ++j) nxt[j] = (nxt[j] + top * red_[0][j]) % p_;
      red_.push_back(nxt);
    }
  }
}

FieldCtx FieldCtx::prime_field(i64 p) {
  validate_char(p);
  FieldCtx F;
  F.p_ = p;
  F.m_ = 1;
  F.modulus_ = {0, 1};  // x
  F.finish_init();
  return F;
}

FieldCtx FieldCtx::extension_field(i64 p, int m) {
  validate_char(p);
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (m == 1) return prime_field(p);
  const i64 count = checked_pow(p, m, "field order exceeds 2^62");
  FieldCtx base = prime_field(p);
  // first monic irreducible of degree m in code order of the low coefficients
  for (i64 code = 0; code < count; ++code) {
    std::vector<i64> mod(m + 1, 0);
    i64 v = code;
    for (int j = 0; j < m; ++j) {
      mod[j] = v % p;
      v /= p;
    }
    mod[m] = 1;
    Poly f;
    f.c.reserve(m + 1);
    for (i64 cj : mod) f.c.push_back(base.from_int(cj));
    if (poly_irreducible(base, f)) {
      FieldCtx F;
      F.p_ = p;
      F.m_ = m;
      F.modulus_ = std::move(mod);
      F.finish_init();
      return F;
    }
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldCtx FieldCtx::make(i64 p, i64 t) {
  validate_char(p);
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (std::gcd(p, t) != 1) throw std::invalid_argument("t must be coprime to p");
  const i64 m = order_mod(p, t);
  return extension_field(p, static_cast<int>(m));
}

FieldCtx FieldCtx::with_modulus(i64 p, std::vector<i64> modulus) {
  validate_char(p);
  if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  for (i64 cj : modulus)
    if (cj < 0 || cj >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
  FieldCtx base = prime_field(p);
  Poly f;
  for (i64 cj : modulus) f.c.push_back(base.from_int(cj));
  if (!poly_irreducible(base, f)) throw std::invalid_argument("modulus is reducible");
  FieldCtx F;
  F.p_ = p;
  F.m_ = static_cast<int>(modulus.size()) - 1;
  F.modulus_ = std::move(modulus);
  F.finish_init();
  return F;
}

std::string FieldCtx::label() const { return "F_" + std::to_string(order_); }

FieldElem FieldCtx::zero() const { return FieldElem{std::vector<i64>(m_, 0)}; }

FieldElem FieldCtx::one() const {
  FieldElem x = zero();
  x.c[0] = 1;
  return x;
}

FieldElem FieldCtx::from_int(i64 v) const {
  FieldElem x = zero();
  v %= p_;
  if (v < 0) v += p_;
  x.c[0] = v;
  return x;
}

FieldElem FieldCtx::from_code(i64 code) const {
  if (code < 0 || code >= order_) throw std::invalid_argument("element code out of range");
  FieldElem x = zero();
  for (int j = 0; j < m_ && code; ++j) {
    x.c[j] = code % p_;
    code /= p_;
  }
  return x;
}

i64 FieldCtx::code(const FieldElem& x) const {
  i64 v = 0;
  for (int j = m_ - 1; j >= 0; --j) v = v * p_ + x.c[j];
  return v;
}

bool FieldCtx::is_zero(const FieldElem& x) const {
  for (i64 cj : x.c)
    if (cj) return false;
  return true;
}

void FieldCtx::raw_add(const i64* a, const i64* b, i64* out) const {
  for (int j = 0; j < m_; ++j) {
    i64 v = a[j] + b[j];
    out[j] = v >= p_ ? v - p_ : v;
  }
}

void FieldCtx::raw_sub(const i64* a, const i64* b, i64* out) const {
  for (int j = 0; j < m_; ++j) {
    i64 v = a[j] - b[j];
    out[j] = v < 0 ? v + p_ : v;
  }
}

void FieldCtx::raw_neg(const i64* a, i64* out) const {
  for (int j = 0; j < m_; ++j) out[j] = a[j] ? p_ - a[j] : 0;
}

bool FieldCtx::raw_is_zero(const i64* a) const {
  for (int j = 0; j < m_; ++j)
    if (a[j]) return false;
  return true;
}

void FieldCtx::raw_reduce(i64* conv, i64* out) const {
  for (int k = 0; k < 2 * m_ - 1; ++k) {
    i64 v = conv[k] % p_;
    conv[k] = v < 0 ? v + p_ : v;
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    const i64 v = conv[k];
    if (!v) continue;
    const std::vector<i64>& row = red_[k - m_];
    for (int j = 0; j < m_; ++j) conv[j] = (conv[j] + v * row[j]) % p_;
  }
  for (int j = 0; j < m_; ++j) out[j] = conv[j];
}

void FieldCtx::raw_mul(const i64* a, const i64* b, i64* out, i64* scratch) const {
  if (m_ == 1) {
    out[0] = (a[0] * b[0]) % p_;
    return;
  }
  for (int k = 0; k < 2 * m_ - 1; ++k) scratch[k] = 0;
  for (int i = 0; i < m_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < m_; ++j) scratch[i + j] += a[i] * b[j];
  }
  raw_reduce(scratch, out);
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = zero();
  raw_add(a.c.data(), b.c.data(), r.c.data());
  return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = zero();
  raw_sub(a.c.data(), b.c.data(), r.c.data());
  return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
  FieldElem r = zero();
  raw_neg(a.c.data(), r.c.data());
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = zero();
  std::vector<i64> scratch(2 * m_ - 1);
  raw_mul(a.c.data(), b.c.data(), r.c.data(), scratch.data());
  return r;
}

FieldElem FieldCtx::pow(const FieldElem& a, i64 e) const {
  if (e < 0) return pow(inv(a), -e);
  FieldElem base = a, r = one();
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  if (is_zero(a)) throw SingularMatrixError("inverse of zero field element");
  return pow(a, order_ - 2);
}

FieldElem FieldCtx::frobenius(const FieldElem& x) const { return pow(x, p_); }

i64 FieldCtx::mult_order(const FieldElem& x) const {
  if (is_zero(x)) throw std::invalid_argument("mult_order of zero");
  FieldElem y = x;
  i64 ord = 1;
  const FieldElem e = one();
  while (!(y == e)) {
    y = mul(y, x);
    ++ord;
    if (ord >= order_) throw std::logic_error("mult_order: runaway");
  }
  return ord;
}

bool FieldCtx::has_exact_order(const FieldElem& x, i64 t) const {
  if (is_zero(x)) return false;
  const FieldElem e = one();
  if (!(pow(x, t) == e)) return false;
  i64 rest = t;
  for (i64 d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    if (pow(x, t / d) == e) return false;
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1 && pow(x, t / rest) == e) return false;
  return true;
}

FieldElem FieldCtx::primitive_root_of_unity(i64 t) const {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if ((order_ - 1) % t != 0)
    throw std::domain_error("field has no primitive root of unity of this order");
  if (t == 1) return one();
  constexpr i64 kScanLimit = 1000000;
  if (order_ <= kScanLimit) {
    for (i64 code = 1; code < order_; ++code) {
      FieldElem x = from_code(code);
      if (has_exact_order(x, t)) return x;
    }
  } else {
    const i64 cofactor = (order_ - 1) / t;
    for (i64 code = 1; code < order_; ++code) {
      FieldElem cand = pow(from_code(code), cofactor);
      if (has_exact_order(cand, t)) return cand;
    }
  }
  throw std::logic_error("no primitive root found");  // unreachable for valid t
}

FieldElem FieldCtx::random(Rng& rng) const {
  return from_code(static_cast<i64>(rng.below(static_cast<std::uint64_t>(order_))));
}

bool code_less(const FieldElem& a, const FieldElem& b) {
  const size_t n = a.c.size();
  for (size_t j = n; j-- > 0;) {
    if (a.c[j] != b.c[j]) return a.c[j] < b.c[j];
  }
  return false;
}

}  // namespace qdd
