#include "qdd/yd_catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdd {

namespace {

YDModule graded_constant(Representation rho, const GroupElem& g) {
  YDModule M;
  M.grading.assign(static_cast<size_t>(rho.degree), g);
  M.rep = std::move(rho);
  return M;
}

Representation reflection_sign(i64 n, const GroupElem& refl, const Fq& F, int sign) {
  const FieldElem v = sign > 0 ? F->one() : F->neg(F->one());
  return make_rep(reflection_group(n, refl), F, {Matrix::from_rows(F, {{v}})});
}

// the trivially graded families keep their shape but change their label head;
// the central class carries a D prefix
std::string graded_label(const std::string& plain, bool central) {
  std::string mapped;
  if (plain.rfind("Phi(", 0) == 0)
    mapped = "V(" + plain.substr(4);
  else if (plain.rfind("Omega(", 0) == 0)
    mapped = "W(" + plain.substr(6);
  else
    throw std::logic_error("graded_label: unexpected label " + plain);
  return central ? "D" + mapped : mapped;
}

void append_constant_block(std::vector<YDCatalogEntry>* out, const DihedralParams& P,
                           const Fq& F, const GroupElem& g, bool central) {
  for (CatalogEntry& e : full_catalog(P, F)) {
    YDCatalogEntry y;
    y.label = graded_label(e.label, central);
    y.cls = g;
    y.yd = graded_constant(std::move(e.rep), g);
    out->push_back(std::move(y));
  }
}

void append_rotation_classes(std::vector<YDCatalogEntry>* out, const DihedralParams& P,
                             const Fq& F, i64 l_max) {
  for (i64 l = 1; l <= l_max; ++l)
    for (int r = 1; r <= static_cast<int>(P.ps); ++r)
      for (i64 j = 0; j < P.t; ++j) {
        YDCatalogEntry y;
        y.label = "DQ(" + std::to_string(r) + "," + std::to_string(j) + "," +
                  std::to_string(l) + ")";
        y.cls = g_rot(P.n, l);
        y.yd = induce_yd(y.cls, rho_cyclic(P, F, r, j));
        out->push_back(std::move(y));
      }
}

}  // namespace

std::vector<YDCatalogEntry> yd_catalog_odd(const DihedralParams& P, const Fq& F) {
  if (P.n % 2 == 0) throw std::invalid_argument("yd_catalog_odd: n must be odd");
  std::vector<YDCatalogEntry> out;
  append_constant_block(&out, P, F, g_identity(), false);
  for (int m = 1; m <= 2; ++m) {
    YDCatalogEntry y;
    y.label = "DU(" + std::to_string(m) + ")";
    y.cls = g_b();
    y.yd = induce_yd(g_b(), reflection_sign(P.n, g_b(), F, m == 1 ? -1 : +1));
    out.push_back(std::move(y));
  }
  append_rotation_classes(&out, P, F, (P.n - 1) / 2);
  return out;
}

std::vector<YDCatalogEntry> yd_catalog_even(const DihedralParams& P, const Fq& F) {
  if (P.n % 2 != 0) throw std::invalid_argument("yd_catalog_even: n must be even");
  std::vector<YDCatalogEntry> out;
  append_constant_block(&out, P, F, g_identity(), false);
  append_constant_block(&out, P, F, g_rot(P.n, P.n / 2), true);
  const std::pair<const char*, GroupElem> reflection_classes[] = {
      {"DV(", g_b()}, {"DU4(", gmul(P.n, g_rot(P.n, 1), g_b())}};
  for (const auto& [head, refl] : reflection_classes) {
    const auto simples = klein_simples(klein_group(P.n, refl), F);
    for (int m = 1; m <= 4; ++m) {
      YDCatalogEntry y;
      y.label = std::string(head) + std::to_string(m) + ")";
      y.cls = refl;
      y.yd = induce_yd(refl, simples[static_cast<size_t>(m - 1)]);
      out.push_back(std::move(y));
    }
  }
  append_rotation_classes(&out, P, F, P.n / 2 - 1);
  return out;
}

std::vector<YDCatalogEntry> full_yd_catalog(const DihedralParams& P, const Fq& F) {
  return P.n % 2 ? yd_catalog_odd(P, F) : yd_catalog_even(P, F);
}

i64 expected_yd_count(const DihedralParams& P) {
  const i64 per_dn = expected_count(P);  // indecomposables of the dihedral algebra
  const i64 per_cn = P.ps * P.t;         // one Jordan block per (size, eigenvalue)
  if (P.n % 2) return per_dn + 2 + ((P.n - 1) / 2) * per_cn;
  return 2 * per_dn + 4 + 4 + (P.n / 2 - 1) * per_cn;
}

YDModule sign_twist(const YDModule& M) {
  const Fq& F = M.rep.F;
  std::vector<Matrix> imgs = M.rep.gen_images;
  for (size_t k = 0; k < imgs.size(); ++k)
    if (M.rep.G->gens[k].flip) imgs[k] = imgs[k].scalar_mul(F->neg(F->one()));
  YDModule out;
  out.rep = make_rep(M.rep.G, F, std::move(imgs), true);
  out.grading = M.grading;
  return out;
}

// random graded change of basis: invertible blocks per degree
YDModule yd_scramble(const YDModule& M, Rng& rng) {
  const Fq& F = M.rep.F;
  const int d = M.rep.degree;
  Matrix U(F, d, d);
  std::vector<GroupElem> degs;
  for (const GroupElem& g : M.grading)
    if (std::find(degs.begin(), degs.end(), g) == degs.end()) degs.push_back(g);
  for (const GroupElem& g : degs) {
    std::vector<int> idx;
    for (int i = 0; i < d; ++i)
      if (M.grading[i] == g) idx.push_back(i);
    const Matrix Ug = random_invertible(F, static_cast<int>(idx.size()), rng);
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < idx.size(); ++c)
        U.set(idx[r], idx[c], Ug.at(static_cast<int>(r), static_cast<int>(c)));
  }
  const Matrix Ui = inverse(U);
  std::vector<Matrix> imgs;
  for (const Matrix& A : M.rep.gen_images) imgs.push_back(Ui * A * U);
  YDModule out;
  out.rep = make_rep(M.rep.G, F, std::move(imgs), true);
  out.grading = M.grading;
  const CheckReport chk = yd_check(out);
  if (!chk.ok) throw std::logic_error("yd_scramble: " + chk.failure);
  return out;
}

// random module over the centralizer of g, small enough to keep the solver
// budgets flat
Representation random_centralizer_module(const DihedralParams& P, const Fq& F,
                                         const GroupElem& g, Rng& rng) {
  const Grp Z = centralizer_group(P.n, g);
  const auto pick_sign = [&]() { return rng.below(2) ? +1 : -1; };
  switch (centralizer_kind(P.n, g)) {
    case CentralizerKind::whole_group: {
      const auto cat = full_catalog(P, F);
      return cat[rng.below(cat.size())].rep;
    }
    case CentralizerKind::rotation_group: {
      const auto roll = [&]() {
        return rho_cyclic(P, F, 1 + static_cast<int>(rng.below(std::min<i64>(P.ps, 3))),
                          static_cast<i64>(rng.below(static_cast<std::uint64_t>(P.t))));
      };
      Representation N = roll();
      if (rng.below(2)) N = direct_sum(N, roll());
      return N;
    }
    case CentralizerKind::klein_four: {
      const auto simples = klein_simples(Z, F);
      Representation N = simples[rng.below(4)];
      if (rng.below(2)) N = direct_sum(N, simples[rng.below(4)]);
      return N;
    }
    case CentralizerKind::reflection_pair: {
      Representation N = reflection_sign(P.n, g, F, pick_sign());
      if (rng.below(2)) N = direct_sum(N, reflection_sign(P.n, g, F, pick_sign()));
      return N;
    }
  }
  throw std::logic_error("random_centralizer_module: unreachable");
}

YDCompletenessReport verify_yd_completeness(const DihedralParams& P, const Fq& F,
                                            Rng& rng, int probes,
                                            const std::vector<YDCatalogEntry>* injected) {
  YDCompletenessReport rep;
  rep.expected = expected_yd_count(P);
  const std::vector<YDCatalogEntry> cat =
      injected ? *injected : full_yd_catalog(P, F);
  rep.actual = static_cast<i64>(cat.size());
  const auto fail = [&](std::string msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = std::move(msg);
    }
  };
  if (rep.actual != rep.expected)
    fail("catalog holds " + std::to_string(rep.actual) + " entries, expected " +
         std::to_string(rep.expected));

  for (const YDCatalogEntry& e : cat) {
    const CheckReport chk = yd_check(e.yd);
    if (!chk.ok) {
      fail(e.label + ": " + chk.failure);
      continue;
    }
    const auto parts = grading_decompose(e.yd);
    if (parts.size() != 1 || !(parts[0].first == e.cls)) {
      fail(e.label + ": grading does not sit on its single declared class");
      continue;
    }
    const auto cert = yd_indecomposable(e.yd, rng);
    if (cert.status != IndecompCertificate::Status::certified)
      fail(e.label + ": indecomposability not certified");
  }

  for (size_t i = 0; i < cat.size() && rep.ok; ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) {
      const IsoResult r = yd_isomorphic(cat[i].yd, cat[j].yd, rng);
      if (r.isomorphic || !r.certified) {
        fail(cat[i].label + " vs " + cat[j].label +
             (r.isomorphic ? ": isomorphic entries" : ": comparison inconclusive"));
        break;
      }
    }

  // closure probe: twisted, rebased, induced and summed modules must land
  // back on catalog labels with nothing left over
  for (int k = 0; k < probes && rep.ok; ++k) {
    YDModule M;
    std::vector<std::string> want;
    bool know_labels = true;
    if (k % 2 == 0) {
      const YDCatalogEntry* a = &cat[rng.below(cat.size())];
      M = a->yd;
      want.push_back(a->label);
      if (rng.below(2)) {
        for (int guard = 0; guard < 32; ++guard) {
          const YDCatalogEntry* b = &cat[rng.below(cat.size())];
          if (a->yd.rep.degree + b->yd.rep.degree > 24) continue;
          M = yd_direct_sum(M, b->yd);
          want.push_back(b->label);
          break;
        }
      }
    } else {
      const auto classes = conjugacy_classes(P.n);
      const GroupElem g = classes[rng.below(classes.size())].rep;
      M = induce_yd(g, random_centralizer_module(P, F, g, rng));
      know_labels = false;
    }
    M = yd_scramble(M, rng);
    if (rng.below(2)) {
      M = sign_twist(M);
      know_labels = false;
    }
    const LabeledDecomposition dec = decompose_against_yd_catalog(M, cat, rng);
    rep.probe_summands += static_cast<i64>(dec.labels.size());
    if (!dec.complete || !dec.certified) {
      fail("closure probe " + std::to_string(k) + ": " + dec.detail);
      break;
    }
    if (know_labels) {
      std::sort(want.begin(), want.end());
      if (want != dec.labels) {
        fail("closure probe " + std::to_string(k) + ": expected labels differ");
        break;
      }
    }
  }
  return rep;
}

LabeledDecomposition decompose_against_yd_catalog(
    const YDModule& M, const std::vector<YDCatalogEntry>& catalog, Rng& rng) {
  LabeledDecomposition out;
  bool all_cert = false;
  const std::vector<YDModule> parts = yd_krull_schmidt(M, rng, &all_cert);
  out.complete = true;
  for (const YDModule& S : parts) {
    std::vector<const YDCatalogEntry*> hits;
    for (const YDCatalogEntry& E : catalog) {
      if (E.yd.rep.degree != S.rep.degree) continue;
      if (yd_isomorphic(S, E.yd, rng).isomorphic) hits.push_back(&E);
    }
    if (hits.size() > 1) {
      std::string msg = "summand matches several supposedly distinct labels:";
      for (const YDCatalogEntry* h : hits) msg += " " + h->label;
      throw std::logic_error(msg);
    }
    if (hits.empty()) {
      out.complete = false;
      out.labels.push_back("?(dim " + std::to_string(S.rep.degree) + ")");
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += "unmatched summand of dimension " + std::to_string(S.rep.degree);
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
