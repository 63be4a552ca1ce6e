// Acceptance gate for the dihedral / quantum-double module catalogs.
//
// Nine criteria, one line each, exit 0 only if every criterion passes.
// Everything runs from a fixed seed; reruns print identical reports.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdd/catalog.hpp"
#include "qdd/field.hpp"
#include "qdd/group.hpp"
#include "qdd/matrix.hpp"
#include "qdd/qdouble.hpp"
#include "qdd/rep.hpp"
#include "qdd/rng.hpp"
#include "qdd/verify.hpp"
#include "qdd/yd_catalog.hpp"

namespace {

using namespace qdd;

struct Criterion {
  bool ok = true;
  std::string detail;
};

// the seven parameter pairs every dihedral-side criterion sweeps
const std::vector<std::pair<i64, i64>> kParams = {
    {3, 3}, {3, 9}, {3, 6}, {3, 12}, {5, 5}, {5, 10}, {7, 21}};
const std::vector<i64> kCatalogSizes = {6, 18, 12, 15, 10, 20, 21};

std::string at(const DihedralParams& P) {
  return "(p=" + std::to_string(P.p) + ", n=" + std::to_string(P.n) + ")";
}

std::string ri(int r, i64 i) {
  return "r=" + std::to_string(r) + ", i=" + std::to_string(i);
}

bool certified_indecomposable(const Representation& V, Rng& rng) {
  return indecomposability_certificate(V, rng).status ==
         IndecompCertificate::Status::certified;
}

// conjugate every generator image by one random invertible matrix
Representation scramble_rep(const Representation& V, Rng& rng) {
  const Matrix U = random_invertible(V.F, V.degree, rng);
  const Matrix Ui = inverse(U);
  std::vector<Matrix> imgs;
  for (const Matrix& A : V.gen_images) imgs.push_back(Ui * A * U);
  return make_rep(V.G, V.F, std::move(imgs), false);
}

// -------------------------------------------------------------------------
// 1. catalog size formula, indecomposability certificates, pairwise
//    distinctness at all seven parameter pairs
Criterion criterion_counts() {
  Criterion c;
  std::vector<std::string> sizes;
  for (size_t q = 0; q < kParams.size(); ++q) {
    const DihedralParams P = DihedralParams::make(kParams[q].first, kParams[q].second);
    const Fq F = make_field(P.p, P.t);
    Rng rng(101 + q);
    const std::vector<CatalogEntry> cat = full_catalog(P, F);

    const i64 formula = (P.t % 2 ? (P.t + 3) / 2 : (P.t + 6) / 2) * P.ps;
    if (static_cast<i64>(cat.size()) != kCatalogSizes[q] ||
        formula != kCatalogSizes[q] || expected_count(P) != kCatalogSizes[q]) {
      c.ok = false;
      c.detail = "size mismatch at " + at(P) + ": got " +
                 std::to_string(cat.size()) + ", want " +
                 std::to_string(kCatalogSizes[q]);
      return c;
    }
    for (const CatalogEntry& e : cat)
      if (!certified_indecomposable(e.rep, rng)) {
        c.ok = false;
        c.detail = "no indecomposability certificate for " + e.label + " at " + at(P);
        return c;
      }
    for (size_t i = 0; i < cat.size(); ++i)
      for (size_t j = i + 1; j < cat.size(); ++j) {
        const IsoResult res = is_isomorphic(cat[i].rep, cat[j].rep, rng);
        if (res.isomorphic || !res.certified) {
          c.ok = false;
          c.detail = cat[i].label + " vs " + cat[j].label + " at " + at(P) +
                     (res.isomorphic ? " unexpectedly isomorphic" : " not certified");
          return c;
        }
      }
    sizes.push_back(std::to_string(cat.size()));
  }
  c.detail.clear();
  for (size_t q = 0; q < sizes.size(); ++q)
    c.detail += (q ? "/" : "") + sizes[q];
  c.detail += " entries, certified indecomposable, pairwise non-isomorphic";
  return c;
}

// -------------------------------------------------------------------------
// 2. generator-matrix identities (involutions, conjugation identities,
//    closed-form inverse, intertwining relation) for all r and admissible i
Criterion criterion_matrix_identities() {
  Criterion c;
  i64 checks = 0;
  for (const auto& [p, n] : kParams) {
    const DihedralParams P = DihedralParams::make(p, n);
    const Fq F = make_field(P.p, P.t);
    const SuiteReport rep = run_suite_matrices(P, F);
    for (const CheckResult& chk : rep.checks) {
      ++checks;
      if (!chk.ok) {
        c.ok = false;
        c.detail = chk.name + " fails at " + at(P) +
                   (chk.detail.empty() ? "" : " (" + chk.detail + ")");
        return c;
      }
    }
  }
  c.detail = std::to_string(checks) + " identity sweeps over " +
             std::to_string(kParams.size()) + " parameter pairs, r = 1..p^s";
  return c;
}

// -------------------------------------------------------------------------
// 3. the induced two-block modules pair up exactly when i + j = t, with an
//    explicit block-antidiagonal witness; non-pairs have zero intertwiners
Criterion criterion_pairing() {
  Criterion c;
  i64 pairs = 0, witnesses = 0;
  for (const auto& [p, n] : kParams) {
    const DihedralParams P = DihedralParams::make(p, n);
    const Fq F = make_field(P.p, P.t);
    Rng rng(303);
    for (int r = 1; r <= P.ps; ++r) {
      std::vector<Representation> ind;
      for (i64 i = 1; i <= P.t - 1; ++i)
        ind.push_back(induce(rho_cyclic(P, F, r, i)));
      for (i64 i = 1; i <= P.t - 1; ++i)
        for (i64 j = i; j <= P.t - 1; ++j) {
          ++pairs;
          const bool expect = (i == j) || (i + j == P.t);
          const IsoResult res = is_isomorphic(ind[i - 1], ind[j - 1], rng);
          if (res.isomorphic != expect || !res.certified) {
            c.ok = false;
            c.detail = "wrong verdict at " + at(P) + ", r=" + std::to_string(r) +
                       ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
            return c;
          }
          if (!expect && !hom_basis(ind[i - 1], ind[j - 1]).empty()) {
            c.ok = false;
            c.detail = "nonzero intertwiner space at " + at(P) + ", i=" +
                       std::to_string(i) + ", j=" + std::to_string(j);
            return c;
          }
          if (expect && i != j) {
            // block-antidiagonal change of basis checked on the generators
            const Matrix X = x_matrix(F, r, i, P.t);
            const Matrix Z(F, r, r);
            const Matrix S = Matrix::block({{Z, X}, {X, Z}});
            const Representation& lo = ind[i - 1];
            const Representation& hi = ind[P.t - i - 1];
            bool witness = rank(S) == 2 * r;
            for (size_t k = 0; k < lo.gen_images.size() && witness; ++k)
              witness = lo.gen_images[k] * S == S * hi.gen_images[k];
            if (!witness) {
              c.ok = false;
              c.detail = "antidiagonal witness fails at " + at(P) + ", " + ri(r, i);
              return c;
            }
            ++witnesses;
          }
        }
    }
  }
  c.detail = std::to_string(pairs) + " pairs checked, " +
             std::to_string(witnesses) + " explicit witnesses";
  return c;
}

// -------------------------------------------------------------------------
// 4. induction from the rotation subgroup at fixed exponents 0 and t/2
//    splits into the two sign lifts; inertia groups follow the dichotomy
Criterion criterion_splitting() {
  Criterion c;
  i64 splits = 0, inertia_checks = 0;
  for (const auto& [p, n] : kParams) {
    const DihedralParams P = DihedralParams::make(p, n);
    const Fq F = make_field(P.p, P.t);
    Rng rng(404);

    std::vector<i64> fixed_exponents = {0};
    if (P.t % 2 == 0) fixed_exponents.push_back(P.t / 2);
    for (const i64 j : fixed_exponents)
      for (int r = 1; r <= P.ps; ++r) {
        const Representation V = induce(rho_cyclic(P, F, r, j));
        bool cert = false;
        const std::vector<Representation> parts = krull_schmidt_summands(V, rng, &cert);
        if (!cert || parts.size() != 2) {
          c.ok = false;
          c.detail = "wrong summand count at " + at(P) + ", " + ri(r, j);
          return c;
        }
        const Representation plus = phi(P, F, r, j, +1).rep;
        const Representation minus = phi(P, F, r, j, -1).rep;
        const auto iso = [&](const Representation& a, const Representation& b) {
          const IsoResult res = is_isomorphic(a, b, rng);
          return res.isomorphic && res.certified;
        };
        const bool straight = iso(parts[0], plus) && iso(parts[1], minus);
        const bool crossed = iso(parts[0], minus) && iso(parts[1], plus);
        if (!(straight || crossed)) {
          c.ok = false;
          c.detail = "summands are not the two sign lifts at " + at(P) + ", " + ri(r, j);
          return c;
        }
        ++splits;
      }

    const std::vector<GroupElem> rot = rotation_group(P.n)->elems;
    const std::vector<GroupElem> all = dihedral_group(P.n)->elems;
    for (int r = 1; r <= P.ps; ++r)
      for (i64 i = 0; i < P.t; ++i) {
        const std::vector<GroupElem> in = inertia_group(rho_cyclic(P, F, r, i), rng);
        const bool whole = (i == 0) || (2 * i == P.t);
        if (in != (whole ? all : rot)) {
          c.ok = false;
          c.detail = "inertia group wrong at " + at(P) + ", " + ri(r, i);
          return c;
        }
        ++inertia_checks;
      }
  }
  c.detail = std::to_string(splits) + " splittings, " +
             std::to_string(inertia_checks) + " inertia groups";
  return c;
}

// -------------------------------------------------------------------------
// 5. every Hopf axiom holds on all basis tuples of the doubles of D_3
//    (dimension 36) and D_6 (dimension 144) in characteristic 3
Criterion criterion_hopf() {
  Criterion c;
  std::vector<std::string> parts;
  for (const i64 n : {3, 6}) {
    const HopfReport rep = verify_hopf(3, n);
    i64 instances = 0;
    for (const AxiomCheck& ax : rep.axioms) {
      instances += ax.instances;
      if (!ax.ok) {
        c.ok = false;
        c.detail = ax.name + " fails for n=" + std::to_string(n) + " at " + ax.failure;
        return c;
      }
    }
    if (!rep.ok) {
      c.ok = false;
      c.detail = "sweep reports failure for n=" + std::to_string(n);
      return c;
    }
    parts.push_back("dim " + std::to_string(4 * n * n) + ": " +
                    std::to_string(rep.axioms.size()) + " axioms, " +
                    std::to_string(instances) + " instances");
  }
  c.detail = parts[0] + "; " + parts[1];
  return c;
}

// -------------------------------------------------------------------------
// 6. graded dictionary at n = 3 and 6: every graded catalog entry is a
//    compatible module over the double, graded in a single class; inducing
//    the extracted centralizer slice returns the entry; induction matches
//    isomorphism in both directions on every same-class pair
Criterion criterion_yd_dictionary() {
  Criterion c;
  i64 entries = 0, pairs = 0;
  for (const i64 n : {3, 6}) {
    const DihedralParams P = DihedralParams::make(3, n);
    const Fq F = make_field(P.p, P.t);
    Rng rng(606);
    const std::vector<YDCatalogEntry> cat = full_yd_catalog(P, F);

    for (const YDCatalogEntry& e : cat) {
      ++entries;
      if (!yd_check(e.yd).ok) {
        c.ok = false;
        c.detail = "grading compatibility fails at " + e.label;
        return c;
      }
      const CheckReport mod = verify_double_module(e.yd);
      if (!mod.ok) {
        c.ok = false;
        c.detail = "module axioms fail at " + e.label + ": " + mod.failure;
        return c;
      }
      const auto graded_parts = grading_decompose(e.yd);
      if (graded_parts.size() != 1 || !(graded_parts[0].first == e.cls)) {
        c.ok = false;
        c.detail = "grading not concentrated on one class at " + e.label;
        return c;
      }
      const Representation N = extract_centralizer_module(e.yd, e.cls);
      const IsoResult round = yd_isomorphic(induce_yd(e.cls, N), e.yd, rng);
      if (!(round.isomorphic && round.certified)) {
        c.ok = false;
        c.detail = "extract-then-induce round trip fails at " + e.label;
        return c;
      }
    }

    // classwise: induced modules are isomorphic exactly when the
    // centralizer modules are; a scrambled copy supplies a positive case
    std::vector<GroupElem> classes;
    for (const YDCatalogEntry& e : cat)
      if (std::find(classes.begin(), classes.end(), e.cls) == classes.end())
        classes.push_back(e.cls);
    for (const GroupElem& cls : classes) {
      std::vector<const YDCatalogEntry*> here;
      for (const YDCatalogEntry& e : cat)
        if (e.cls == cls) here.push_back(&e);
      std::vector<Representation> inputs;
      for (const YDCatalogEntry* e : here)
        inputs.push_back(extract_centralizer_module(e->yd, cls));
      for (size_t i = 0; i < here.size(); ++i)
        for (size_t j = i + 1; j < here.size(); ++j) {
          ++pairs;
          const IsoResult plain = is_isomorphic(inputs[i], inputs[j], rng);
          const IsoResult graded = yd_isomorphic(here[i]->yd, here[j]->yd, rng);
          if (plain.isomorphic != graded.isomorphic || !plain.certified ||
              !graded.certified) {
            c.ok = false;
            c.detail = "verdicts differ at " + here[i]->label + " vs " + here[j]->label;
            return c;
          }
        }
      if (!here.empty()) {
        ++pairs;
        Rng sub = rng.fork(static_cast<std::uint64_t>(
            cls.flip ? P.n + cls.rot : cls.rot));
        const Representation M = scramble_rep(inputs[0], sub);
        const IsoResult plain = is_isomorphic(inputs[0], M, rng);
        const IsoResult graded =
            yd_isomorphic(induce_yd(cls, inputs[0]), induce_yd(cls, M), rng);
        if (!(plain.isomorphic && plain.certified && graded.isomorphic &&
              graded.certified)) {
          c.ok = false;
          c.detail = "scrambled copy not recognized at " + here[0]->label;
          return c;
        }
      }
    }
  }
  c.detail = std::to_string(entries) + " entries, " + std::to_string(pairs) +
             " classwise pairs, both directions";
  return c;
}

// -------------------------------------------------------------------------
// 7. graded catalog sizes 11 / 56 / 44 / 22, pairwise non-isomorphic as
//    graded modules
Criterion criterion_yd_counts() {
  Criterion c;
  const std::vector<std::pair<i64, i64>> params = {{3, 3}, {3, 9}, {3, 6}, {5, 5}};
  const std::vector<i64> want = {11, 56, 44, 22};
  std::vector<std::string> sizes;
  for (size_t q = 0; q < params.size(); ++q) {
    const DihedralParams P = DihedralParams::make(params[q].first, params[q].second);
    const Fq F = make_field(P.p, P.t);
    Rng rng(707);
    const std::vector<YDCatalogEntry> cat = full_yd_catalog(P, F);
    if (static_cast<i64>(cat.size()) != want[q] || expected_yd_count(P) != want[q]) {
      c.ok = false;
      c.detail = "size mismatch at " + at(P) + ": got " +
                 std::to_string(cat.size()) + ", want " + std::to_string(want[q]);
      return c;
    }
    for (size_t i = 0; i < cat.size(); ++i)
      for (size_t j = i + 1; j < cat.size(); ++j) {
        // different grading classes are distinct outright; only same-class
        // pairs need the certified isomorphism test
        if (!(cat[i].cls == cat[j].cls)) continue;
        const IsoResult res = yd_isomorphic(cat[i].yd, cat[j].yd, rng);
        if (res.isomorphic || !res.certified) {
          c.ok = false;
          c.detail = cat[i].label + " vs " + cat[j].label + " at " + at(P) +
                     (res.isomorphic ? " unexpectedly isomorphic" : " not certified");
          return c;
        }
      }
    sizes.push_back(std::to_string(cat.size()));
  }
  c.detail.clear();
  for (size_t q = 0; q < sizes.size(); ++q)
    c.detail += (q ? "/" : "") + sizes[q];
  c.detail += " graded entries, pairwise non-isomorphic";
  return c;
}

// -------------------------------------------------------------------------
// 8. the simple sublists match an independent count of classes of elements
//    with order coprime to p; the reflection-class graded simples are
//    generated by every single basis vector
Criterion criterion_simples() {
  Criterion c;
  const std::vector<std::pair<i64, i64>> params = {{3, 3}, {3, 9}, {3, 6}};
  const std::vector<i64> want = {2, 2, 4};
  i64 generated = 0;
  for (size_t q = 0; q < params.size(); ++q) {
    const DihedralParams P = DihedralParams::make(params[q].first, params[q].second);
    const Fq F = make_field(P.p, P.t);

    i64 regular = 0;
    for (const ConjClass& cls : conjugacy_classes(P.n))
      if (element_order(P.n, cls.rep) % P.p != 0) ++regular;
    const std::vector<CatalogEntry> simples = simple_sublist(P, F);
    if (static_cast<i64>(simples.size()) != want[q] || regular != want[q] ||
        static_cast<i64>(p_regular_class_reps(P).size()) != want[q]) {
      c.ok = false;
      c.detail = "simple count mismatch at " + at(P) + ": " +
                 std::to_string(simples.size()) + " simples, " +
                 std::to_string(regular) + " regular classes, want " +
                 std::to_string(want[q]);
      return c;
    }

    for (const YDCatalogEntry& e : full_yd_catalog(P, F)) {
      const CentralizerKind kind = centralizer_kind(P.n, e.cls);
      if (kind != CentralizerKind::reflection_pair &&
          kind != CentralizerKind::klein_four)
        continue;
      if (!generates_from_every_basis_vector(e.yd)) {
        c.ok = false;
        c.detail = "a basis vector fails to generate " + e.label + " at " + at(P);
        return c;
      }
      ++generated;
    }
  }
  c.detail = "2/2/4 simples = regular-class counts; " + std::to_string(generated) +
             " single-vector generation checks";
  return c;
}

// -------------------------------------------------------------------------
// 9. closure probe: at every parameter pair, 200 seeded random modules
//    (scrambled sums, inductions from the rotation subgroup, tensor
//    products) decompose completely onto catalog labels, none inconclusive
Criterion criterion_closure() {
  Criterion c;
  constexpr int kProbes = 200;
  constexpr int kSumDimCap = 18;
  constexpr int kTensorDimCap = 16;
  i64 total = 0;
  for (const auto& [p, n] : kParams) {
    const DihedralParams P = DihedralParams::make(p, n);
    const Fq F = make_field(P.p, P.t);
    const std::vector<CatalogEntry> cat = full_catalog(P, F);
    const Rng base(909 + static_cast<std::uint64_t>(100 * p + n));

    for (int q = 0; q < kProbes; ++q) {
      Rng rng = base.fork(static_cast<std::uint64_t>(q));
      Representation probe = cat[0].rep;
      std::vector<std::string> want;  // empty = any catalog labels accepted
      switch (q % 3) {
        case 0: {  // scrambled direct sum with known answer
          std::optional<Representation> sum;
          int dim = 0;
          const int count = 1 + static_cast<int>(rng.below(3));
          for (int k = 0; k < count; ++k) {
            const CatalogEntry& e = cat[rng.below(cat.size())];
            if (dim + e.rep.degree > kSumDimCap) continue;
            want.push_back(e.label);
            dim += e.rep.degree;
            sum = sum ? direct_sum(*sum, e.rep) : e.rep;
          }
          if (!sum) {
            sum = cat[0].rep;
            want.push_back(cat[0].label);
          }
          std::sort(want.begin(), want.end());
          probe = scramble_rep(*sum, rng);
          break;
        }
        case 1: {  // induction of a random rotation-subgroup module
          const GroupElem a = g_rot(P.n, 1);
          probe = scramble_rep(induce(random_centralizer_module(P, F, a, rng)), rng);
          break;
        }
        case 2: {  // tensor product of two catalog entries
          const CatalogEntry* e1 = &cat[rng.below(cat.size())];
          const CatalogEntry* e2 = &cat[rng.below(cat.size())];
          for (int tries = 0; tries < 32; ++tries) {
            if (e1->rep.degree * e2->rep.degree <= kTensorDimCap) break;
            e1 = &cat[rng.below(cat.size())];
            e2 = &cat[rng.below(cat.size())];
          }
          if (e1->rep.degree * e2->rep.degree > kTensorDimCap) e1 = e2 = &cat[0];
          probe = scramble_rep(tensor_product(e1->rep, e2->rep), rng);
          break;
        }
      }
      const LabeledDecomposition dec = decompose_against_catalog(probe, cat, rng);
      if (!dec.complete || !dec.certified) {
        c.ok = false;
        c.detail = "inconclusive decomposition at " + at(P) + ", probe " +
                   std::to_string(q);
        return c;
      }
      if (!want.empty() && dec.labels != want) {
        c.ok = false;
        c.detail = "wrong label multiset at " + at(P) + ", probe " + std::to_string(q);
        return c;
      }
      ++total;
    }
  }
  c.detail = std::to_string(total) + " random modules over " +
             std::to_string(kParams.size()) +
             " parameter pairs, 0 inconclusive";
  return c;
}

struct Gate {
  const char* name;
  Criterion (*run)();
};

const Gate kGates[] = {
    {"catalog counts, certificates, distinctness", criterion_counts},
    {"generator-matrix identities", criterion_matrix_identities},
    {"two-block pairing with explicit witnesses", criterion_pairing},
    {"induction splitting and inertia dichotomy", criterion_splitting},
    {"Hopf axiom sweep, doubles of D_3 and D_6", criterion_hopf},
    {"graded dictionary against centralizer modules", criterion_yd_dictionary},
    {"graded catalog counts and distinctness", criterion_yd_counts},
    {"simple counts and single-vector generation", criterion_simples},
    {"closure probe on random modules", criterion_closure},
};

}  // namespace

int main() {
  int passed = 0;
  const int total = static_cast<int>(std::size(kGates));
  for (int i = 0; i < total; ++i) {
    Criterion c;
    try {
      c = kGates[i].run();
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail = std::string("exception: ") + ex.what();
    }
    passed += c.ok ? 1 : 0;
    std::printf("criterion %d: %s — %s%s%s\n", i + 1, kGates[i].name,
                c.ok ? "pass" : "FAIL", c.detail.empty() ? "" : " (",
                c.detail.empty() ? "" : (c.detail + ")").c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/%d criteria pass\n", passed, total);
  return passed == total ? 0 : 1;
}
