#include "qdd/verify.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdd {

namespace {

void push(SuiteReport& rep, std::string name, bool ok, std::string detail = "") {
  rep.checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
}

std::string ri(int r, i64 i) {
  return "r=" + std::to_string(r) + ", i=" + std::to_string(i);
}

// contravariant dual: generators act by the transposed inverse
Representation dual_rep(const Representation& V) {
  std::vector<Matrix> imgs;
  for (const Matrix& A : V.gen_images) imgs.push_back(inverse(A).transpose());
  return make_rep(V.G, V.F, std::move(imgs), false);
}

// conjugate every generator image by one random invertible matrix
Representation scramble_rep(const Representation& V, Rng& rng) {
  const Matrix U = random_invertible(V.F, V.degree, rng);
  const Matrix Ui = inverse(U);
  std::vector<Matrix> imgs;
  for (const Matrix& A : V.gen_images) imgs.push_back(Ui * A * U);
  return make_rep(V.G, V.F, std::move(imgs), false);
}

// direct sum of the picked entries conjugated by a random change of basis,
// together with the sorted label multiset it must decompose into
struct PlainProbe {
  Representation module;
  std::vector<std::string> want;
};
PlainProbe make_plain_probe(const std::vector<CatalogEntry>& cat, Rng& rng, int dim_cap) {
  std::vector<const CatalogEntry*> picked;
  int dim = 0;
  const int count = 1 + static_cast<int>(rng.below(3));
  for (int k = 0; k < count; ++k) {
    const auto& e = cat[rng.below(cat.size())];
    if (dim + e.rep.degree > dim_cap) continue;
    picked.push_back(&e);
    dim += e.rep.degree;
  }
  if (picked.empty()) {
    picked.push_back(&cat[0]);
    dim = cat[0].rep.degree;
  }
  PlainProbe probe;
  std::optional<Representation> sum;
  for (const CatalogEntry* e : picked) {
    probe.want.push_back(e->label);
    sum = sum ? direct_sum(*sum, e->rep) : e->rep;
  }
  std::sort(probe.want.begin(), probe.want.end());
  probe.module = scramble_rep(*sum, rng);
  return probe;
}

}  // namespace

bool SuiteReport::ok() const {
  for (const CheckResult& c : checks)
    if (!c.ok) return false;
  return true;
}

SuiteReport run_suite_matrices(const DihedralParams& P, const Fq& F) {
  SuiteReport rep;
  rep.suite = "matrices";
  const i64 t = P.t;
  const bool even_t = (t % 2 == 0);
  const std::string range = "r = 1.." + std::to_string(P.ps);

  {
    bool ok = true;
    std::string det = range;
    for (int r = 1; r <= P.ps && ok; ++r) {
      const Matrix T = t_matrix(F, r);
      if (!(T * T == Matrix::identity(F, r))) {
        ok = false;
        det = "fails at r=" + std::to_string(r);
      }
    }
    push(rep, "T²=I", ok, det);
  }

  {
    if (!even_t) {
      push(rep, "T₁²=I", true, "vacuous, t odd");
    } else {
      bool ok = true;
      std::string det = range;
      for (int r = 1; r <= P.ps && ok; ++r) {
        const Matrix T1 = t1_matrix(F, r, t);
        if (!(T1 * T1 == Matrix::identity(F, r))) {
          ok = false;
          det = "fails at r=" + std::to_string(r);
        }
      }
      push(rep, "T₁²=I", ok, det);
    }
  }

  {
    bool ok = true;
    std::string det = range;
    for (int r = 1; r <= P.ps && ok; ++r) {
      const Matrix A = a_matrix(F, r, 0, t);
      const Matrix T = t_matrix(F, r);
      if (!(A * T * A == T)) {
        ok = false;
        det = "fails at r=" + std::to_string(r);
      }
    }
    push(rep, "A(r,0) T A(r,0) = T", ok, det);
  }

  {
    if (!even_t) {
      push(rep, "A(r,t/2) T1 A(r,t/2) = T1", true, "vacuous, t odd");
    } else {
      bool ok = true;
      std::string det = range;
      for (int r = 1; r <= P.ps && ok; ++r) {
        const Matrix A = a_matrix(F, r, t / 2, t);
        const Matrix T1 = t1_matrix(F, r, t);
        if (!(A * T1 * A == T1)) {
          ok = false;
          det = "fails at r=" + std::to_string(r);
        }
      }
      push(rep, "A(r,t/2) T1 A(r,t/2) = T1", ok, det);
    }
  }

  {
    bool ok = true;
    std::string det = range + ", i = 0.." + std::to_string(t - 1);
    for (int r = 1; r <= P.ps && ok; ++r)
      for (i64 i = 0; i < t && ok; ++i) {
        const Matrix A = a_matrix(F, r, i, t);
        const Matrix B = a_inverse_closed_form(F, r, i, t);
        if (!((A * B).is_identity() && B == inverse(A))) {
          ok = false;
          det = "fails at " + ri(r, i);
        }
      }
    push(rep, "closed-form inverse of A(r,i)", ok, det);
  }

  {
    bool ok = true;
    std::string det = range + ", i = 0.." + std::to_string(t - 1);
    for (int r = 1; r <= P.ps && ok; ++r)
      for (i64 i = 0; i < t && ok; ++i) {
        const Matrix X = x_matrix(F, r, i, t);
        const Matrix A = a_matrix(F, r, i, t);
        const Matrix Binv = a_inverse_closed_form(F, r, t - i, t);
        if (!(rank(X) == r && A * X == X * Binv)) {
          ok = false;
          det = "fails at " + ri(r, i);
        }
      }
    push(rep, "A(r,i) X = X A(r,t-i)^-1, X invertible", ok, det);
  }

  return rep;
}

SuiteReport run_suite_catalog(const DihedralParams& P, const Fq& F, Rng& rng,
                              const VerifyBudget& budget) {
  SuiteReport rep;
  rep.suite = "catalog";
  const std::vector<CatalogEntry> cat = full_catalog(P, F);

  push(rep, "count formula", static_cast<i64>(cat.size()) == expected_count(P),
       std::to_string(cat.size()) + " modules, expected " +
           std::to_string(expected_count(P)));

  {
    bool ok = true;
    std::string det = std::to_string(cat.size()) + " certificates";
    for (const CatalogEntry& e : cat) {
      const IndecompCertificate c = indecomposability_certificate(e.rep, rng);
      if (c.status != IndecompCertificate::Status::certified) {
        ok = false;
        det = "fails at " + e.label;
        break;
      }
    }
    push(rep, "entries certified indecomposable", ok, det);
  }

  {
    bool distinct = true, symmetric = true;
    std::string d1, d2;
    i64 pairs = 0;
    std::vector<Representation> duals;
    for (const CatalogEntry& e : cat) duals.push_back(dual_rep(e.rep));
    for (size_t i = 0; i < cat.size(); ++i)
      for (size_t j = i + 1; j < cat.size(); ++j) {
        ++pairs;
        const std::string names = cat[i].label + " vs " + cat[j].label;
        if (distinct) {
          const IsoResult res = is_isomorphic(cat[i].rep, cat[j].rep, rng);
          if (res.isomorphic || !res.certified) {
            distinct = false;
            d1 = "fails at " + names;
          }
        }
        if (symmetric &&
            hom_basis(cat[i].rep, cat[j].rep).size() !=
                hom_basis(duals[j], duals[i]).size()) {
          symmetric = false;
          d2 = "fails at " + names;
        }
      }
    const std::string count = std::to_string(pairs) + " pairs";
    push(rep, "pairwise non-isomorphic", distinct, distinct ? count : d1);
    push(rep, "dim Hom(V,W) = dim Hom(W*,V*)", symmetric, symmetric ? count : d2);
  }

  {
    if (P.t <= 2) {
      push(rep, "pairing i+j=t", true, "vacuous, t=" + std::to_string(P.t));
    } else {
      bool ok = true;
      std::string det;
      i64 pairs = 0;
      for (int r = 1; r <= P.ps && ok; ++r) {
        std::vector<Representation> ind;
        for (i64 i = 1; i <= P.t - 1; ++i)
          ind.push_back(induce(rho_cyclic(P, F, r, i)));
        for (i64 i = 1; i <= P.t - 1 && ok; ++i)
          for (i64 j = i; j <= P.t - 1 && ok; ++j) {
            ++pairs;
            const bool expect = (i == j) || (i + j == P.t);
            const IsoResult res = is_isomorphic(ind[i - 1], ind[j - 1], rng);
            if (res.isomorphic != expect || !res.certified) {
              ok = false;
              det = "wrong verdict at r=" + std::to_string(r) + ", i=" +
                    std::to_string(i) + ", j=" + std::to_string(j);
              break;
            }
            if (!expect && !hom_basis(ind[i - 1], ind[j - 1]).empty()) {
              ok = false;
              det = "nonzero intertwiner space at r=" + std::to_string(r) +
                    ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
              break;
            }
            if (expect && i != j) {
              // explicit block-antidiagonal witness checked on the generators
              const Matrix X = x_matrix(F, r, i, P.t);
              const Matrix Z(F, r, r);
              const Matrix S = Matrix::block({{Z, X}, {X, Z}});
              const Representation& lo = ind[i - 1];
              const Representation& hi = ind[P.t - i - 1];
              bool witness = rank(S) == 2 * r;
              for (size_t k = 0; k < lo.gen_images.size() && witness; ++k)
                witness = lo.gen_images[k] * S == S * hi.gen_images[k];
              if (!witness) {
                ok = false;
                det = "antidiagonal witness fails at " + ri(r, i);
              }
            }
          }
      }
      push(rep, "pairing i+j=t", ok, ok ? std::to_string(pairs) + " pairs" : det);
    }
  }

  {
    i64 regular = 0;
    for (const ConjClass& C : conjugacy_classes(P.n))
      if (element_order(P.n, C.rep) % P.p != 0) ++regular;
    const auto simples = simple_sublist(P, F);
    const bool ok = static_cast<i64>(simples.size()) == regular &&
                    regular == static_cast<i64>(p_regular_class_reps(P).size());
    push(rep, "simples = p-regular classes", ok,
         std::to_string(simples.size()) + " simples, " + std::to_string(regular) +
             " regular classes");
  }

  {
    bool ok = true;
    std::string det = "r = 1.." + std::to_string(P.ps) + ", i = 0.." +
                      std::to_string(P.t - 1);
    const Grp C = rotation_group(P.n);
    const FieldElem xi = F->primitive_root_of_unity(P.t);
    for (int r = 1; r <= P.ps && ok; ++r)
      for (i64 i = 0; i < P.t && ok; ++i) {
        // scaled unipotent Jordan block = (p-part indecomposable) ⊗ (character)
        Matrix M(F, r, r);
        const FieldElem s = F->pow(xi, i);
        for (int v = 0; v < r; ++v) {
          M.set(v, v, s);
          if (v + 1 < r) M.set(v, v + 1, s);
        }
        const Representation rhs = make_rep(C, F, {std::move(M)}, true);
        const IsoResult res = is_isomorphic(rho_cyclic(P, F, r, i), rhs, rng);
        if (!(res.isomorphic && res.certified)) {
          ok = false;
          det = "fails at " + ri(r, i);
        }
      }
    push(rep, "rho(r,i) = (Jordan block) ⊗ (exponent-i character)", ok, det);
  }

  {
    const i64 probes = std::max<i64>(4, budget.samples / 8);
    bool ok = true;
    std::string det;
    i64 parts = 0;
    for (i64 q = 0; q < probes && ok; ++q) {
      Rng sub = rng.fork(1000 + static_cast<std::uint64_t>(q));
      const PlainProbe probe = make_plain_probe(cat, sub, 24);
      const LabeledDecomposition dec =
          decompose_against_catalog(probe.module, cat, sub);
      if (!(dec.complete && dec.certified && dec.labels == probe.want)) {
        ok = false;
        det = "probe " + std::to_string(q) + ": " + dec.detail;
      }
      parts += static_cast<i64>(dec.labels.size());
    }
    push(rep, "random modules decompose onto catalog labels", ok,
         ok ? std::to_string(probes) + " probes, " + std::to_string(parts) +
                  " summands"
            : det);
  }

  {
    bool ok = true;
    std::string det = "2 modules, 2 seeds each";
    for (i64 q = 0; q < 2 && ok; ++q) {
      Rng build = rng.fork(2000 + static_cast<std::uint64_t>(q));
      const PlainProbe probe = make_plain_probe(cat, build, 24);
      Rng s1 = rng.fork(3000 + static_cast<std::uint64_t>(q));
      Rng s2 = rng.fork(4000 + static_cast<std::uint64_t>(q));
      const LabeledDecomposition d1 = decompose_against_catalog(probe.module, cat, s1);
      const LabeledDecomposition d2 = decompose_against_catalog(probe.module, cat, s2);
      if (!(d1.complete && d2.complete && d1.labels == d2.labels)) {
        ok = false;
        det = "label multisets differ on probe " + std::to_string(q);
      }
    }
    push(rep, "decomposition is seed-independent", ok, det);
  }

  return rep;
}

SuiteReport run_suite_hopf(const DihedralParams& P, const VerifyBudget& budget) {
  SuiteReport rep;
  rep.suite = "hopf";
  if (P.n <= budget.hopf_max_n) {
    const HopfReport hr = verify_hopf(P.p, P.n);
    for (const AxiomCheck& ax : hr.axioms)
      push(rep, ax.name, ax.ok,
           ax.ok ? std::to_string(ax.instances) + " instances"
                 : "fails at " + ax.failure);
  } else {
    push(rep, "bialgebra and antipode identities", true,
         "skipped, n=" + std::to_string(P.n) + " exceeds budget " +
             std::to_string(budget.hopf_max_n));
  }

  {
    // the deliberately corrupted product table must be caught
    const HopfReport bad = verify_hopf(P.p, 3, true);
    bool caught = !bad.ok;
    std::string which;
    for (const AxiomCheck& ax : bad.axioms)
      if (!ax.ok && ax.name == "associativity" && !ax.failure.empty())
        which = "associativity fails at " + ax.failure;
    if (which.empty()) caught = false;
    push(rep, "corrupted product table is detected", caught, which);
  }

  return rep;
}

SuiteReport run_suite_yd(const DihedralParams& P, const Fq& F, Rng& rng,
                         const VerifyBudget& budget) {
  SuiteReport rep;
  rep.suite = "yd";
  const std::vector<YDCatalogEntry> cat = full_yd_catalog(P, F);

  push(rep, "graded count formula",
       static_cast<i64>(cat.size()) == expected_yd_count(P),
       std::to_string(cat.size()) + " modules, expected " +
           std::to_string(expected_yd_count(P)));

  {
    bool ok = true;
    std::string det = std::to_string(cat.size()) + " modules";
    for (const YDCatalogEntry& e : cat) {
      const CheckReport c = yd_check(e.yd);
      if (!c.ok) {
        ok = false;
        det = "fails at " + e.label + ": " + c.failure;
        break;
      }
    }
    push(rep, "grading compatible with the action", ok, det);
  }

  {
    if (P.n > budget.hopf_max_n) {
      push(rep, "module axioms over the double", true,
           "skipped, n=" + std::to_string(P.n) + " exceeds budget " +
               std::to_string(budget.hopf_max_n));
    } else {
      bool ok = true;
      std::string det = std::to_string(cat.size()) + " modules";
      for (const YDCatalogEntry& e : cat) {
        const CheckReport c = verify_double_module(e.yd);
        if (!c.ok) {
          ok = false;
          det = "fails at " + e.label + ": " + c.failure;
          break;
        }
      }
      push(rep, "module axioms over the double", ok, det);
    }
  }

  {
    bool ok = true;
    std::string det = std::to_string(cat.size()) + " modules";
    for (const YDCatalogEntry& e : cat) {
      const auto parts = grading_decompose(e.yd);
      if (!(parts.size() == 1 && parts[0].first == e.cls)) {
        ok = false;
        det = "fails at " + e.label;
        break;
      }
    }
    push(rep, "grading concentrated on one class", ok, det);
  }

  {
    bool ok = true;
    std::string det = std::to_string(cat.size()) + " certificates, two methods";
    for (const YDCatalogEntry& e : cat) {
      const IndecompCertificate c = yd_indecomposable(e.yd, rng);
      if (c.status != IndecompCertificate::Status::certified) {
        ok = false;
        det = "fails at " + e.label;
        break;
      }
    }
    push(rep, "entries certified indecomposable", ok, det);
  }

  {
    bool ok = true;
    std::string det;
    i64 pairs = 0;
    for (size_t i = 0; i < cat.size() && ok; ++i)
      for (size_t j = i + 1; j < cat.size() && ok; ++j) {
        ++pairs;
        const IsoResult res = yd_isomorphic(cat[i].yd, cat[j].yd, rng);
        if (res.isomorphic || !res.certified) {
          ok = false;
          det = "fails at " + cat[i].label + " vs " + cat[j].label;
        }
      }
    push(rep, "pairwise non-isomorphic as graded modules", ok,
         ok ? std::to_string(pairs) + " pairs" : det);
  }

  {
    bool ok = true;
    std::string det = std::to_string(cat.size()) + " round trips";
    for (const YDCatalogEntry& e : cat) {
      const Representation N = extract_centralizer_module(e.yd, e.cls);
      const YDModule back = induce_yd(e.cls, N);
      const IsoResult res = yd_isomorphic(back, e.yd, rng);
      if (!(res.isomorphic && res.certified)) {
        ok = false;
        det = "fails at " + e.label;
        break;
      }
    }
    push(rep, "extract-then-induce round trip", ok, det);
  }

  {
    // induced modules over a fixed class are isomorphic exactly when the
    // centralizer modules are; scrambled copies supply the positive cases
    bool ok = true;
    std::string det;
    i64 pairs = 0;
    std::vector<GroupElem> classes;
    for (const YDCatalogEntry& e : cat)
      if (std::find(classes.begin(), classes.end(), e.cls) == classes.end())
        classes.push_back(e.cls);
    for (const GroupElem& c : classes) {
      std::vector<const YDCatalogEntry*> here;
      for (const YDCatalogEntry& e : cat)
        if (e.cls == c) here.push_back(&e);
      std::vector<Representation> inputs;
      for (const YDCatalogEntry* e : here)
        inputs.push_back(extract_centralizer_module(e->yd, c));

      for (size_t i = 0; i < here.size() && ok; ++i)
        for (size_t j = i + 1; j < here.size() && ok; ++j) {
          ++pairs;
          const IsoResult plain = is_isomorphic(inputs[i], inputs[j], rng);
          const IsoResult graded = yd_isomorphic(here[i]->yd, here[j]->yd, rng);
          if (plain.isomorphic != graded.isomorphic) {
            ok = false;
            det = "verdicts differ at " + here[i]->label + " vs " + here[j]->label;
          }
        }

      if (ok && !here.empty()) {
        ++pairs;
        Rng sub = rng.fork(7000 + static_cast<std::uint64_t>(c.flip ? P.n + c.rot : c.rot));
        const Representation& N = inputs[0];
        const Representation M = scramble_rep(N, sub);
        const IsoResult plain = is_isomorphic(N, M, rng);
        const IsoResult graded = yd_isomorphic(induce_yd(c, N), induce_yd(c, M), rng);
        if (!(plain.isomorphic && plain.certified && graded.isomorphic &&
              graded.certified)) {
          ok = false;
          det = "scrambled copy not recognized at " + here[0]->label;
        }
      }
    }
    push(rep, "induction matches isomorphism classwise", ok,
         ok ? std::to_string(pairs) + " pairs over " +
                  std::to_string(classes.size()) + " classes"
            : det);
  }

  {
    bool ok = true;
    i64 counted = 0;
    std::string det;
    for (const YDCatalogEntry& e : cat) {
      const CentralizerKind kind = centralizer_kind(P.n, e.cls);
      if (kind != CentralizerKind::reflection_pair && kind != CentralizerKind::klein_four)
        continue;
      ++counted;
      if (!generates_from_every_basis_vector(e.yd)) {
        ok = false;
        det = "fails at " + e.label;
        break;
      }
    }
    push(rep, "reflection-class simples generated by every vector", ok,
         ok ? std::to_string(counted) + " modules" : det);
  }

  {
    const i64 probes = std::max<i64>(4, budget.samples / 8);
    bool ok = true;
    std::string det;
    i64 parts = 0;
    for (i64 q = 0; q < probes && ok; ++q) {
      Rng sub = rng.fork(5000 + static_cast<std::uint64_t>(q));
      YDModule M;
      std::vector<std::string> want;  // empty when the labels are not forced
      if (q % 2 == 0) {
        // sum of two catalog entries under a graded change of basis
        const YDCatalogEntry* a = &cat[sub.below(cat.size())];
        const YDCatalogEntry* b = &cat[sub.below(cat.size())];
        for (int guard = 0; guard < 32 && a->yd.rep.degree + b->yd.rep.degree > 24;
             ++guard)
          b = &cat[sub.below(cat.size())];
        if (a->yd.rep.degree + b->yd.rep.degree > 24) b = a = &cat[0];
        M = yd_scramble(yd_direct_sum(a->yd, b->yd), sub);
        want = {a->label, b->label};
        std::sort(want.begin(), want.end());
        if (sub.below(2) == 0) {
          M = sign_twist(M);
          want.clear();
        }
      } else {
        // induction of a random centralizer module at a random class
        const GroupElem c = cat[sub.below(cat.size())].cls;
        M = induce_yd(c, random_centralizer_module(P, F, c, sub));
        M = yd_scramble(M, sub);
      }
      const LabeledDecomposition dec = decompose_against_yd_catalog(M, cat, sub);
      if (!(dec.complete && dec.certified)) {
        ok = false;
        det = "probe " + std::to_string(q) + ": " + dec.detail;
      } else if (!want.empty() && dec.labels != want) {
        ok = false;
        det = "probe " + std::to_string(q) + ": wrong label multiset";
      }
      parts += static_cast<i64>(dec.labels.size());
    }
    push(rep, "twists, sums, and inductions land on catalog labels", ok,
         ok ? std::to_string(probes) + " probes, " + std::to_string(parts) +
                  " summands"
            : det);
  }

  return rep;
}

SuiteReport run_suite_mackey(const DihedralParams& P, const Fq& F, Rng& rng,
                             const VerifyBudget& budget) {
  SuiteReport rep;
  rep.suite = "mackey";
  (void)budget;
  const std::string range = "r = 1.." + std::to_string(P.ps);

  const auto splits_into_sign_lifts = [&](i64 j, std::string* det) {
    for (int r = 1; r <= P.ps; ++r) {
      const Representation V = induce(rho_cyclic(P, F, r, j));
      bool cert = false;
      const std::vector<Representation> parts = krull_schmidt_summands(V, rng, &cert);
      if (!cert || parts.size() != 2) {
        *det = "wrong summand count at r=" + std::to_string(r);
        return false;
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
        *det = "summands are not the two sign lifts at r=" + std::to_string(r);
        return false;
      }
    }
    return true;
  };

  {
    std::string det = range;
    const bool ok = splits_into_sign_lifts(0, &det);
    push(rep, "induce(rho(r,0)) = {Phi(r,0,+), Phi(r,0,-)}", ok, det);
  }
  {
    if (P.t % 2 != 0) {
      push(rep, "induce(rho(r,t/2)) = {Phi(r,t/2,+), Phi(r,t/2,-)}", true,
           "vacuous, t odd");
    } else {
      std::string det = range;
      const bool ok = splits_into_sign_lifts(P.t / 2, &det);
      push(rep, "induce(rho(r,t/2)) = {Phi(r,t/2,+), Phi(r,t/2,-)}", ok, det);
    }
  }

  {
    bool ok = true;
    std::string det = range + ", i = 0.." + std::to_string(P.t - 1);
    const std::vector<GroupElem> rot = rotation_group(P.n)->elems;
    const std::vector<GroupElem> all = dihedral_group(P.n)->elems;
    for (int r = 1; r <= P.ps && ok; ++r)
      for (i64 i = 0; i < P.t && ok; ++i) {
        const std::vector<GroupElem> in =
            inertia_group(rho_cyclic(P, F, r, i), rng);
        const bool whole = (i == 0) || (2 * i == P.t);
        if (in != (whole ? all : rot)) {
          ok = false;
          det = "fails at " + ri(r, i);
        }
      }
    push(rep, "inertia dichotomy", ok, det);
  }

  {
    bool ok = true;
    std::string det = range + ", i = 0.." + std::to_string(P.t - 1);
    for (int r = 1; r <= P.ps && ok; ++r)
      for (i64 i = 0; i < P.t && ok; ++i) {
        std::string why;
        if (!mackey_restriction_holds(rho_cyclic(P, F, r, i), rng, &why)) {
          ok = false;
          det = "fails at " + ri(r, i) + ": " + why;
        }
      }
    push(rep, "double-coset restriction identity", ok, det);
  }

  {
    bool ok = true;
    std::string det;
    const Grp C = rotation_group(P.n);

    // the coset module itself splits into the two one-dimensional lifts
    const Representation kGC = coset_permutation_rep(dihedral_group(P.n), C, F);
    bool cert = false;
    const auto parts = krull_schmidt_summands(kGC, rng, &cert);
    if (!(cert && parts.size() == 2 && parts[0].degree == 1 && parts[1].degree == 1)) {
      ok = false;
      det = "coset module does not split into two lines";
    }

    std::vector<Representation> samples{phi(P, F, 1, 0, +1).rep,
                                        phi(P, F, P.ps, 0, -1).rep};
    if (P.t > 2) samples.push_back(omega(P, F, 1, 1).rep);
    i64 checked = 0;
    for (const Representation& W : samples) {
      if (!ok) break;
      ++checked;
      std::string why;
      if (!induction_restriction_holds(W, C, rng, &why)) {
        ok = false;
        det = "fails on sample " + std::to_string(checked) + ": " + why;
      }
    }
    push(rep, "restrict-then-induce = tensor with coset module", ok,
         ok ? std::to_string(checked) + " samples + coset module split" : det);
  }

  {
    bool ok = true;
    std::string det;
    std::vector<Representation> vs{phi(P, F, 1, 0, +1).rep,
                                   phi(P, F, P.ps, 0, +1).rep};
    if (P.t > 2) vs.push_back(omega(P, F, 1, 1).rep);
    std::vector<Representation> rhos{rho_cyclic(P, F, 1, 0),
                                     rho_cyclic(P, F, P.ps, P.t - 1)};
    i64 checked = 0;
    for (const Representation& rho : rhos)
      for (const Representation& V : vs) {
        if (!ok) break;
        ++checked;
        std::string why;
        if (!frobenius_adjunction_holds(rho, V, &why)) {
          ok = false;
          det = "fails on sample " + std::to_string(checked) + ": " + why;
        }
      }
    push(rep, "hom-dimension adjunction", ok,
         ok ? std::to_string(checked) + " samples" : det);
  }

  {
    bool ok = true;
    std::string det;
    i64 checked = 0;
    for (i64 q = 0; q < 3 && ok; ++q) {
      Rng sub = rng.fork(6000 + static_cast<std::uint64_t>(q));
      const int r1 = 1 + static_cast<int>(sub.below(std::min<i64>(P.ps, 4)));
      const int r2 = 1 + static_cast<int>(sub.below(std::min<i64>(P.ps, 4)));
      const i64 i1 = static_cast<i64>(sub.below(P.t));
      const i64 i2 = static_cast<i64>(sub.below(P.t));
      const Representation x = rho_cyclic(P, F, r1, i1);
      const Representation y = rho_cyclic(P, F, r2, i2);
      const Representation lhs = induce(direct_sum(x, y));
      const Representation rhs = direct_sum(induce(x), induce(y));
      const IsoResult res = is_isomorphic(lhs, rhs, rng);
      ++checked;
      if (!(res.isomorphic && res.certified)) {
        ok = false;
        det = "fails at r=" + std::to_string(r1) + "," + std::to_string(r2) +
              " i=" + std::to_string(i1) + "," + std::to_string(i2);
      }
    }
    push(rep, "induction is additive over direct sums", ok,
         ok ? std::to_string(checked) + " samples" : det);
  }

  return rep;
}

std::vector<SuiteReport> run_suites(const std::string& which, const DihedralParams& P,
                                    const Fq& F, Rng& rng, const VerifyBudget& budget) {
  const bool all = which == "all";
  if (!(all || which == "matrices" || which == "catalog" || which == "hopf" ||
        which == "yd" || which == "mackey"))
    throw std::invalid_argument("unknown suite: " + which);

  std::vector<SuiteReport> out;
  if (all || which == "matrices" || which == "catalog")
    out.push_back(run_suite_matrices(P, F));
  if (all || which == "catalog") out.push_back(run_suite_catalog(P, F, rng, budget));
  if (all || which == "hopf") out.push_back(run_suite_hopf(P, budget));
  if (all || which == "yd") out.push_back(run_suite_yd(P, F, rng, budget));
  if (all || which == "mackey") out.push_back(run_suite_mackey(P, F, rng, budget));
  return out;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream os;
  os << "[" << report.suite << "]\n";
  int passed = 0;
  for (const CheckResult& c : report.checks) {
    os << c.name << ": " << (c.ok ? "pass" : "fail");
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
    if (c.ok) ++passed;
  }
  os << "[" << report.suite << "] " << passed << "/" << report.checks.size()
     << " checks pass\n";
  return os.str();
}

}  // namespace qdd
