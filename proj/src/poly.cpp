#include "qdd/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "qdd/rng.hpp"

namespace qdd {

int poly_deg(const Poly& f) { return static_cast<int>(f.c.size()) - 1; }

Poly poly_zero() { return Poly{}; }

Poly poly_one(const FieldCtx& F) { return Poly{{F.one()}}; }

Poly poly_x(const FieldCtx& F) { return Poly{{F.zero(), F.one()}}; }

Poly poly_const(const FieldCtx& F, const FieldElem& a) {
  if (F.is_zero(a)) return poly_zero();
  return Poly{{a}};
}

Poly poly_linear(const FieldCtx& F, const FieldElem& a) {
  return Poly{{F.neg(a), F.one()}};
}

Poly poly_trim(Poly f, const FieldCtx& F) {
  while (!f.c.empty() && F.is_zero(f.c.back())) f.c.pop_back();
  return f;
}

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly r;
  const size_t n = std::max(a.c.size(), b.c.size());
  r.c.resize(n, F.zero());
  for (size_t i = 0; i < n; ++i) {
    if (i < a.c.size()) r.c[i] = F.add(r.c[i], a.c[i]);
    if (i < b.c.size()) r.c[i] = F.add(r.c[i], b.c[i]);
  }
  return poly_trim(std::move(r), F);
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly r;
  const size_t n = std::max(a.c.size(), b.c.size());
  r.c.resize(n, F.zero());
  for (size_t i = 0; i < n; ++i) {
    if (i < a.c.size()) r.c[i] = F.add(r.c[i], a.c[i]);
    if (i < b.c.size()) r.c[i] = F.sub(r.c[i], b.c[i]);
  }
  return poly_trim(std::move(r), F);
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return poly_zero();
  Poly r;
  r.c.resize(a.c.size() + b.c.size() - 1, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (F.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return poly_trim(std::move(r), F);
}

Poly poly_scale(const FieldCtx& F, const FieldElem& s, const Poly& a) {
  if (F.is_zero(s)) return poly_zero();
  Poly r = a;
  for (FieldElem& cj : r.c) cj = F.mul(s, cj);
  return poly_trim(std::move(r), F);
}

std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (b.c.empty()) throw std::invalid_argument("polynomial division by zero");
  Poly rem = a, quot;
  const int db = poly_deg(b);
  if (poly_deg(a) < db) return {poly_zero(), rem};
  quot.c.resize(a.c.size() - b.c.size() + 1, F.zero());
  const FieldElem lead_inv = F.inv(b.c.back());
  for (int k = poly_deg(rem); k >= db; --k) {
    if (static_cast<size_t>(k) >= rem.c.size() || F.is_zero(rem.c[k])) continue;
    const FieldElem q = F.mul(rem.c[k], lead_inv);
    quot.c[k - db] = q;
    for (int j = 0; j <= db; ++j)
      rem.c[k - db + j] = F.sub(rem.c[k - db + j], F.mul(q, b.c[j]));
  }
  return {poly_trim(std::move(quot), F), poly_trim(std::move(rem), F)};
}

Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b) {
  return poly_divmod(F, a, b).second;
}

Poly poly_make_monic(const FieldCtx& F, const Poly& a) {
  if (a.c.empty()) return a;
  return poly_scale(F, F.inv(a.c.back()), a);
}

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
  while (!b.c.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(F, a);
}

Poly poly_powmod(const FieldCtx& F, Poly base, i64 e, const Poly& f) {
  if (e < 0) throw std::invalid_argument("poly_powmod: negative exponent");
  base = poly_mod(F, base, f);
  Poly r = poly_mod(F, poly_one(F), f);
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) r = poly_mod(F, poly_mul(F, r, base), f);
    base = poly_mod(F, poly_mul(F, base, base), f);
    k >>= 1;
  }
  return r;
}

Poly poly_pow(const FieldCtx& F, const Poly& base, i64 e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  Poly b = base, r = poly_one(F);
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) r = poly_mul(F, r, b);
    b = poly_mul(F, b, b);
    k >>= 1;
  }
  return r;
}

FieldElem poly_eval(const FieldCtx& F, const Poly& f, const FieldElem& x) {
  FieldElem acc = F.zero();
  for (size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
  return acc;
}

namespace {

// x^{q^k} mod f by k-fold exponentiation; never forms q^k
Poly frobenius_power(const FieldCtx& F, int k, const Poly& f) {
  Poly y = poly_mod(F, poly_x(F), f);
  for (int i = 0; i < k; ++i) y = poly_powmod(F, y, F.order(), f);
  return y;
}

}  // namespace

bool poly_irreducible(const FieldCtx& F, const Poly& f) {
  const int m = poly_deg(f);
  if (m < 1) return false;
  if (m == 1) return true;
  // Rabin: x^{q^m} = x mod f, and gcd(x^{q^{m/l}} - x, f) = 1 for primes l | m
  Poly xm = frobenius_power(F, m, f);
  if (!poly_sub(F, xm, poly_mod(F, poly_x(F), f)).c.empty()) return false;
  std::vector<int> primes;
  int rest = m;
  for (int l = 2; l * l <= rest; ++l) {
    if (rest % l == 0) {
      primes.push_back(l);
      while (rest % l == 0) rest /= l;
    }
  }
  if (rest > 1) primes.push_back(rest);
  for (int l : primes) {
    Poly d = poly_sub(F, frobenius_power(F, m / l, f), poly_x(F));
    if (poly_deg(poly_gcd(F, d, f)) != 0) return false;
  }
  return true;
}

namespace {

// f splits into distinct linear factors; peel roots off by seeded
// equal-degree splitting (odd q)
void split_linear(const FieldCtx& F, const Poly& f, Rng& rng,
                  std::vector<FieldElem>& out) {
  const int d = poly_deg(f);
  if (d <= 0) return;
  if (d == 1) {
    // monic X + c0 -> root -c0 ; normalize first
    Poly g = poly_make_monic(F, f);
    out.push_back(F.neg(g.c[0]));
    return;
  }
  const i64 half = (F.order() - 1) / 2;
  for (;;) {
    Poly r;
    r.c.resize(d, F.zero());
    for (int i = 0; i < d; ++i) r.c[i] = F.random(rng);
    r = poly_trim(std::move(r), F);
    if (r.c.empty()) continue;
    Poly w = poly_sub(F, poly_powmod(F, r, half, f), poly_one(F));
    Poly g = poly_gcd(F, w, f);
    const int dg = poly_deg(g);
    if (dg <= 0 || dg >= d) continue;
    split_linear(F, g, rng, out);
    split_linear(F, poly_divmod(F, f, g).first, rng, out);
    return;
  }
}

}  // namespace

std::vector<FieldElem> roots_in_field(const FieldCtx& F, const Poly& f) {
  std::vector<FieldElem> roots;
  if (f.c.empty()) throw std::invalid_argument("roots_in_field: zero polynomial");
  constexpr i64 kScanLimit = 10000;
  if (F.order() <= kScanLimit) {
    for (i64 code = 0; code < F.order(); ++code) {
      FieldElem x = F.from_code(code);
      if (F.is_zero(poly_eval(F, f, x))) roots.push_back(x);
    }
    return roots;  // already in code order
  }
  // root locus = gcd(f, x^q - x), a product of distinct linear factors
  Poly xq = poly_powmod(F, poly_x(F), F.order(), f);
  Poly g = poly_gcd(F, poly_sub(F, xq, poly_x(F)), f);
  if (poly_deg(g) == 0) return roots;
  Rng rng(0xC0FFEEULL);  // fixed: root extraction must be deterministic
  split_linear(F, g, rng, roots);
  std::sort(roots.begin(), roots.end(),
            [](const FieldElem& a, const FieldElem& b) { return code_less(a, b); });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string poly_to_string(const FieldCtx& /*F*/, const Poly& f) {
  if (f.c.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i) s += " + ";
    s += "(";
    for (size_t j = 0; j < f.c[i].c.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(f.c[i].c[j]);
    }
    s += ")";
    if (i == 1) s += "*X";
    if (i > 1) s += "*X^" + std::to_string(i);
  }
  return s;
}

}  // namespace qdd
