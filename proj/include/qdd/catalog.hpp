#pragma once
#include <string>
#include <vector>

#include "qdd/rep.hpp"

namespace qdd {

// Explicit matrix families over a field holding a primitive t-th root of
// unity xi. Everything is r x r, 1 <= r <= p^s, exponents taken mod t.

// upper bidiagonal: xi^i on the diagonal, 1 on the superdiagonal
Matrix a_matrix(const Fq& F, int r, i64 i, i64 t);
// the inverse of a_matrix written entrywise: xi^{-i} on the diagonal and
// (-1)^{u-v} xi^{-(u-v+1)i} in position (v, u) above it
Matrix a_inverse_closed_form(const Fq& F, int r, i64 i, i64 t);
// upper triangular involution satisfying A_{r,0} T A_{r,0} = T, filled from
// the bottom row up by t_ij = -t_{i+1,j} - t_{i+1,j+1}
Matrix t_matrix(const Fq& F, int r);
// variant for even t with the xi^{t/2} weight on the first recurrence term,
// satisfying A_{r,t/2} T1 A_{r,t/2} = T1
Matrix t1_matrix(const Fq& F, int r, i64 t);
// upper triangular change of basis with A_{r,i} X = X A_{r,t-i}^{-1}
Matrix x_matrix(const Fq& F, int r, i64 i, i64 t);

// indecomposable rotation-subgroup module: a acts by a_matrix(r, i)
Representation rho_cyclic(const DihedralParams& P, const Fq& F, int r, i64 i);

// the four one-dimensional representations of a rank-2 elementary abelian
// 2-group K, indexed 1..4 by the sign pattern on (gens[0], gens[1]):
// (+,+), (+,-), (-,+), (-,-)
std::vector<Representation> klein_simples(const Grp& K, const Fq& F);

struct CatalogEntry {
  std::string label;  // fixed grammar: Phi(r,j,s) / Omega(2r,i)
  std::string note;   // how the entry is built
  Representation rep;
};

// dihedral module with a -> A_{r,j} and b -> sign * T (j = 0) or
// sign * T1 (j = t/2, even t only)
CatalogEntry phi(const DihedralParams& P, const Fq& F, int r, i64 j, int sign);
// dihedral module induced from rho_cyclic(r, i); accepts 1 <= i <= t-1
// except t/2, folding i > t/2 onto the isomorphic t-i entry
CatalogEntry omega(const DihedralParams& P, const Fq& F, int r, i64 i);

// (t+3)/2 * p^s for odd n, (t+6)/2 * p^s for even n
i64 expected_count(const DihedralParams& P);
// all indecomposable dihedral modules up to isomorphism, in a stable order:
// Phi entries before Omega entries, ascending (r, j), + before -
std::vector<CatalogEntry> full_catalog(const DihedralParams& P, const Fq& F);
// the irreducible ones: the r = 1 slice
std::vector<CatalogEntry> simple_sublist(const DihedralParams& P, const Fq& F);

// Krull-Schmidt decomposition with each summand named against a catalog.
// A summand matching two labels would contradict the catalog's pairwise
// non-isomorphism and raises std::logic_error instead of picking one.
struct LabeledDecomposition {
  std::vector<std::string> labels;  // sorted, one per summand
  bool complete = false;            // every summand matched a catalog entry
  bool certified = false;           // complete and every certificate conclusive
  std::string detail;
};
LabeledDecomposition decompose_against_catalog(
    const Representation& V, const std::vector<CatalogEntry>& catalog, Rng& rng);

}  // namespace qdd
