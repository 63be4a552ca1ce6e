#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdd/rep.hpp"

namespace qdd {

// basis element phi_g (x) h of the double algebra built on the dihedral
// group of order 2n: phi_g is the dual basis vector at g, h the group part
struct DoubleBasisIndex {
  GroupElem g;
  GroupElem h;
  bool operator==(const DoubleBasisIndex&) const = default;
};

// (phi_g (x) h)(phi_g' (x) h') = phi_g (x) hh' when g = h g' h^{-1}, else 0
std::optional<DoubleBasisIndex> double_multiply(i64 n, const DoubleBasisIndex& x,
                                                const DoubleBasisIndex& y);
// splits the dual part over every left factor w:
// (phi_w (x) h) tensor (phi_{g w^{-1}} (x) h) summed over w in the group
std::vector<std::pair<DoubleBasisIndex, DoubleBasisIndex>> double_comultiply(
    i64 n, const DoubleBasisIndex& x);
// 1 when the dual part sits at the identity, else 0
i64 double_counit(const DoubleBasisIndex& x);
DoubleBasisIndex double_antipode(i64 n, const DoubleBasisIndex& x);

struct AxiomCheck {
  std::string name;
  bool ok = true;
  i64 instances = 0;
  std::string failure;  // first failing instance, by basis indices
};
struct HopfReport {
  bool ok = true;
  std::vector<AxiomCheck> axioms;
};
// full sweep of the bialgebra and antipode identities over every basis
// tuple, with scalar accumulation done mod p. `corrupt` flips one product
// table entry first, as a negative control.
HopfReport verify_hopf(i64 p, i64 n, bool corrupt = false);

// a dihedral module carrying a group grading of its basis; the module
// structure over the double is the pair (action, grading)
struct YDModule {
  Representation rep;                // over the full dihedral group
  std::vector<GroupElem> grading;    // degree of each basis vector
};

struct CheckReport {
  bool ok = true;
  std::string failure;
};

// compatibility: each generator h maps the degree-g component into the
// degree-(h g h^{-1}) component
CheckReport yd_check(const YDModule& M);

// canonical subgroup object for a centralizer, generator choice fixed by
// the centralizer's shape
Grp centralizer_group(i64 n, const GroupElem& g);

// graded induction from a module N over the centralizer of g_C: one block
// per transversal element x, graded by x g_C x^{-1}; re-verified
YDModule induce_yd(const GroupElem& g_C, const Representation& N);

// action of a single double basis element: project-to-degree after acting
Matrix double_action(const YDModule& M, const DoubleBasisIndex& x);
// module axioms against the structure constants on all basis pairs, plus
// the unit action
CheckReport verify_double_module(const YDModule& M);

// split along conjugacy classes of the degrees, canonical class order;
// the parts are the (class representative, graded submodule) pairs
std::vector<std::pair<GroupElem, YDModule>> grading_decompose(const YDModule& M);

// intertwiners that preserve the grading degree-by-degree
std::vector<Matrix> yd_hom_basis(const YDModule& M, const YDModule& N);
// module isomorphism respecting the grading; same certification contract
// as the ungraded is_isomorphic
IsoResult yd_isomorphic(const YDModule& M, const YDModule& N, Rng& rng);

// the degree-g_C slice as a module over the centralizer of g_C
Representation extract_centralizer_module(const YDModule& M, const GroupElem& g_C);

// decided two independent ways (grading-masked endomorphism certificate;
// certificate of the centralizer slice) and cross-checked; a conclusive
// contradiction between them raises std::logic_error
IndecompCertificate yd_indecomposable(const YDModule& M, Rng& rng);

// graded restriction to an invariant subspace spanned by B's columns;
// rejects subspaces that do not split along the grading
YDModule yd_sub_module(const YDModule& M, const Matrix& B);
YDModule yd_direct_sum(const YDModule& A, const YDModule& B);
std::vector<YDModule> yd_krull_schmidt(const YDModule& M, Rng& rng,
                                       bool* all_certified = nullptr);

// every single basis vector generates the whole module over the double
bool generates_from_every_basis_vector(const YDModule& M);

}  // namespace qdd
