#include "qdd/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qdd {

namespace {

FieldElem root_of_unity(const Fq& F, i64 t) {
  return F->primitive_root_of_unity(t);
}

void require_r(const DihedralParams& P, int r) {
  if (r < 1 || r > P.ps)
    throw std::invalid_argument("block size r out of range [1, p^s]");
}

std::string sign_char(int sign) { return sign > 0 ? "+" : "-"; }

}  // namespace

Matrix a_matrix(const Fq& F, int r, i64 i, i64 t) {
  if (r < 1) throw std::invalid_argument("a_matrix: r must be positive");
  const FieldElem d = F->pow(root_of_unity(F, t), i);
  Matrix A(F, r, r);
  for (int k = 0; k < r; ++k) {
    A.set(k, k, d);
    if (k + 1 < r) A.set(k, k + 1, F->one());
  }
  return A;
}

Matrix a_inverse_closed_form(const Fq& F, int r, i64 i, i64 t) {
  if (r < 1) throw std::invalid_argument("a_inverse_closed_form: r must be positive");
  const FieldElem xi = root_of_unity(F, t);
  Matrix B(F, r, r);
  for (int v = 0; v < r; ++v)
    for (int u = v; u < r; ++u) {
      // position (v, u), offset u - v: (-1)^{u-v} xi^{-(u-v+1) i}
      FieldElem e = F->pow(xi, -static_cast<i64>(u - v + 1) * i);
      if ((u - v) % 2 == 1) e = F->neg(e);
      B.set(v, u, e);
    }
  return B;
}

Matrix t_matrix(const Fq& F, int r) {
  if (r < 1) throw std::invalid_argument("t_matrix: r must be positive");
  Matrix T(F, r, r);
  T.set(r - 1, r - 1, F->one());
  for (int i = r - 2; i >= 0; --i) {
    T.set(i, i, F->neg(T.at(i + 1, i + 1)));
    for (int j = i + 1; j < r; ++j) {
      const FieldElem right = (j + 1 < r) ? T.at(i + 1, j + 1) : F->zero();
      T.set(i, j, F->sub(F->neg(T.at(i + 1, j)), right));
    }
  }
  return T;
}

Matrix t1_matrix(const Fq& F, int r, i64 t) {
  if (r < 1) throw std::invalid_argument("t1_matrix: r must be positive");
  if (t % 2 != 0) throw std::invalid_argument("t1_matrix: t must be even");
  const FieldElem w = F->pow(root_of_unity(F, t), t / 2);
  Matrix T(F, r, r);
  T.set(r - 1, r - 1, F->one());
  for (int i = r - 2; i >= 0; --i) {
    T.set(i, i, F->neg(T.at(i + 1, i + 1)));
    for (int j = i + 1; j < r; ++j) {
      const FieldElem right = (j + 1 < r) ? T.at(i + 1, j + 1) : F->zero();
      T.set(i, j, F->sub(F->neg(F->mul(w, T.at(i + 1, j))), right));
    }
  }
  return T;
}

Matrix x_matrix(const Fq& F, int r, i64 i, i64 t) {
  if (r < 1) throw std::invalid_argument("x_matrix: r must be positive");
  const FieldElem xi = root_of_unity(F, t);
  const FieldElem xi_i = F->pow(xi, i);
  Matrix X(F, r, r);
  for (int k = 0; k < r; ++k) X.set(0, k, F->one());
  if (r >= 2) {
    // second row: -xi^{2i} * (1 + (-xi^i) + (-xi^i)^2 + ...), one more term
    // per column
    const FieldElem head = F->neg(F->mul(xi_i, xi_i));
    const FieldElem step = F->neg(xi_i);
    FieldElem acc = F->zero();
    FieldElem pw = F->one();
    for (int k = 1; k < r; ++k) {
      acc = F->add(acc, pw);
      pw = F->mul(pw, step);
      X.set(1, k, F->mul(head, acc));
    }
  }
  // remaining rows from the previous one; entries in math indices (rows and
  // columns counted from 1): x_{jk} = sum_{y=j-1}^{k-1} (-1)^{k-y} xi^{(k+1-y)i} x_{(j-1)y}
  for (int j = 2; j < r; ++j)
    for (int k = j; k < r; ++k) {
      FieldElem s = F->zero();
      for (int y = j; y <= k; ++y) {
        FieldElem term =
            F->mul(F->pow(xi, static_cast<i64>(k + 2 - y) * i), X.at(j - 1, y - 1));
        if ((k + 1 - y) % 2 == 1) term = F->neg(term);
        s = F->add(s, term);
      }
      X.set(j, k, s);
    }
  return X;
}

Representation rho_cyclic(const DihedralParams& P, const Fq& F, int r, i64 i) {
  require_r(P, r);
  if (i < 0 || i >= P.t) throw std::invalid_argument("rho_cyclic: i out of range [0, t)");
  return make_rep(rotation_group(P.n), F, {a_matrix(F, r, i, P.t)});
}

std::vector<Representation> klein_simples(const Grp& K, const Fq& F) {
  if (K->gens.size() != 2)
    throw std::invalid_argument("klein_simples: group must have two generators");
  for (const GroupElem& g : K->gens)
    if (element_order(K->n, g) != 2)
      throw std::invalid_argument("klein_simples: generators must be involutions");
  const Matrix plus = Matrix::identity(F, 1);
  const Matrix minus = plus.neg();
  std::vector<Representation> out;
  out.reserve(4);
  for (int m = 1; m <= 4; ++m)
    out.push_back(make_rep(K, F, {m <= 2 ? plus : minus, m % 2 == 1 ? plus : minus}));
  return out;
}

CatalogEntry phi(const DihedralParams& P, const Fq& F, int r, i64 j, int sign) {
  require_r(P, r);
  if (sign != 1 && sign != -1) throw std::invalid_argument("phi: sign must be +1 or -1");
  const bool at_half = P.t % 2 == 0 && j == P.t / 2;
  if (j != 0 && !at_half)
    throw std::invalid_argument("phi: j must be 0, or t/2 for even t");
  Matrix B = at_half ? t1_matrix(F, r, P.t) : t_matrix(F, r);
  if (sign < 0) B = B.neg();
  CatalogEntry e;
  e.label = "Phi(" + std::to_string(r) + "," + std::to_string(j) + "," + sign_char(sign) + ")";
  e.note = "a -> A(" + std::to_string(r) + "," + std::to_string(j) + "), b -> " +
           sign_char(sign) + (at_half ? "T1" : "T");
  e.rep = make_rep(dihedral_group(P.n), F, {a_matrix(F, r, j, P.t), std::move(B)});
  return e;
}

CatalogEntry omega(const DihedralParams& P, const Fq& F, int r, i64 i) {
  require_r(P, r);
  if (i <= 0 || i >= P.t || (P.t % 2 == 0 && i == P.t / 2))
    throw std::invalid_argument(
        "omega: i must lie in [1, t-1] and avoid t/2 (those inductions split)");
  if (2 * i > P.t) i = P.t - i;  // the two inductions are isomorphic
  CatalogEntry e;
  e.label = "Omega(" + std::to_string(2 * r) + "," + std::to_string(i) + ")";
  e.note = "induced from the rotation module a -> A(" + std::to_string(r) + "," +
           std::to_string(i) + ")";
  e.rep = induce(rho_cyclic(P, F, r, i));
  return e;
}

i64 expected_count(const DihedralParams& P) {
  return (P.n % 2 == 0 ? (P.t + 6) / 2 : (P.t + 3) / 2) * P.ps;
}

std::vector<CatalogEntry> full_catalog(const DihedralParams& P, const Fq& F) {
  std::vector<CatalogEntry> out;
  const bool even = P.n % 2 == 0;
  for (int r = 1; r <= P.ps; ++r) {
    out.push_back(phi(P, F, r, 0, +1));
    out.push_back(phi(P, F, r, 0, -1));
    if (even) {
      out.push_back(phi(P, F, r, P.t / 2, +1));
      out.push_back(phi(P, F, r, P.t / 2, -1));
    }
  }
  const i64 imax = even ? P.t / 2 - 1 : (P.t - 1) / 2;
  for (int r = 1; r <= P.ps; ++r)
    for (i64 i = 1; i <= imax; ++i) out.push_back(omega(P, F, r, i));
  return out;
}

std::vector<CatalogEntry> simple_sublist(const DihedralParams& P, const Fq& F) {
  std::vector<CatalogEntry> out;
  const bool even = P.n % 2 == 0;
  out.push_back(phi(P, F, 1, 0, +1));
  out.push_back(phi(P, F, 1, 0, -1));
  if (even) {
    out.push_back(phi(P, F, 1, P.t / 2, +1));
    out.push_back(phi(P, F, 1, P.t / 2, -1));
  }
  const i64 imax = even ? P.t / 2 - 1 : (P.t - 1) / 2;
  for (i64 i = 1; i <= imax; ++i) out.push_back(omega(P, F, 1, i));
  return out;
}

LabeledDecomposition decompose_against_catalog(
    const Representation& V, const std::vector<CatalogEntry>& catalog, Rng& rng) {
  LabeledDecomposition out;
  bool all_cert = false;
  const std::vector<Representation> parts = krull_schmidt_summands(V, rng, &all_cert);
  out.complete = true;
  for (const Representation& S : parts) {
    std::vector<const CatalogEntry*> hits;
    for (const CatalogEntry& E : catalog) {
      if (E.rep.degree != S.degree) continue;
      if (is_isomorphic(S, E.rep, rng).isomorphic) hits.push_back(&E);
    }
    if (hits.size() > 1) {
      std::string msg = "summand matches several supposedly distinct labels:";
      for (const CatalogEntry* h : hits) msg += " " + h->label;
      throw std::logic_error(msg);
    }
    if (hits.empty()) {
      out.complete = false;
      out.labels.push_back("?(dim " + std::to_string(S.degree) + ")");
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += "unmatched summand of dimension " + std::to_string(S.degree);
    } else {
      out.labels.push_back(hits[0]->label);
    }
  }
  std::sort(out.labels.begin(), out.labels.end());
  out.certified = out.complete && all_cert;
  if (!all_cert) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += "a summand certificate was inconclusive";
  }
  return out;
}

}  // namespace qdd
