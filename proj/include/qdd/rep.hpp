#pragma once
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdd/group.hpp"
#include "qdd/matrix.hpp"

namespace qdd {

// a subgroup of the dihedral group of order 2n, closed under the group law,
// with a fixed generator list and a spanning tree of generator words so a
// representation only needs matrices for the generators
struct RepGroup {
  i64 n = 0;
  std::string name;
  std::vector<GroupElem> gens;
  std::vector<GroupElem> elems;     // enumeration order (rotations first)
  std::vector<int> parent;          // spanning-tree edge: elems[i] =
  std::vector<int> parent_gen;      //   elems[parent[i]] * gens[parent_gen[i]]
  std::vector<int> depth;           // word length along the tree

  static RepGroup from_generators(i64 n, std::string name,
                                  std::vector<GroupElem> gens);
  bool contains(const GroupElem& g) const;
  int index_of(const GroupElem& g) const;  // -1 if absent
  i64 size() const { return static_cast<i64>(elems.size()); }
};

using Grp = std::shared_ptr<const RepGroup>;

Grp dihedral_group(i64 n);
Grp rotation_group(i64 n);                      // <a>
Grp sylow_rotation_group(const DihedralParams& P);  // <a^t>, order p^s
Grp reflection_group(i64 n, const GroupElem& refl);  // order 2
// <a^{n/2}, refl> for even n (the centralizer of a reflection)
Grp klein_group(i64 n, const GroupElem& refl);
Grp trivial_group(i64 n);

// matrix representation: one invertible matrix per generator, acting on
// column vectors
struct Representation {
  Grp G;
  Fq F;
  int degree = 0;
  std::vector<Matrix> gen_images;
};

// verify_relations walks every (element, generator) edge of the group and
// checks the word-built images respect it, which makes the generator
// assignment a homomorphism
Representation make_rep(Grp G, Fq F, std::vector<Matrix> gen_images,
                        bool verify_relations = true);

// image of an arbitrary element, built from its generator word
Matrix image(const Representation& rho, const GroupElem& g);
// images of all elements, indexed like G->elems
std::vector<Matrix> all_images(const Representation& rho);

Representation trivial_rep(Grp G, Fq F);
// permutation action of left multiplication on the element list
Representation regular_rep(Grp G, Fq F);

// induced representation of the full dihedral group, blocks indexed by the
// greedy transversal of G in it
Representation induce(const Representation& rho);
// restriction to a subgroup of rho's group
Representation restrict_to(const Representation& rho, Grp H);
Representation direct_sum(const Representation& a, const Representation& b);
Representation tensor_product(const Representation& a, const Representation& b);
// g |-> rho(x^{-1} g x) on the conjugated subgroup x G x^{-1}
Representation conjugate_rep(const Representation& rho, const GroupElem& x);

// basis of the intertwiner space {S : S rho_V(g) = rho_W(g) S}; shape
// deg W x deg V, echelonized, deterministic
std::vector<Matrix> hom_basis(const Representation& V, const Representation& W);

struct IsoResult {
  bool isomorphic = false;
  // negative answers may be probabilistic; positive answers always carry an
  // exactly verified witness
  bool certified = false;
  std::optional<Matrix> witness;
  std::string detail;
};
IsoResult is_isomorphic(const Representation& V, const Representation& W, Rng& rng);

struct IndecompCertificate {
  enum class Status { certified, decomposed, inconclusive };
  Status status = Status::inconclusive;
  // certified: the endomorphism algebra E splits as scalars + nilpotent
  // ideal N with an explicit strictly shrinking power chain, so E is local
  int end_dim = 0;
  int radical_chain_length = 0;
  // decomposed: column bases of two complementary invariant subspaces
  std::optional<std::pair<Matrix, Matrix>> summands;
  std::string detail;
};
IndecompCertificate indecomposability_certificate(const Representation& V, Rng& rng);
// the same certificate computed over an explicitly supplied endomorphism
// basis (graded modules cut End down by a grading mask before certifying)
IndecompCertificate certificate_over_end(const Fq& F, int degree,
                                         const std::vector<Matrix>& E, Rng& rng);

// full decomposition into indecomposable summands; *all_certified reports
// whether every leaf carried a locality certificate
std::vector<Representation> krull_schmidt_summands(const Representation& V, Rng& rng,
                                                   bool* all_certified = nullptr);

// stabilizer of the isomorphism class of rho (a rep of a normal subgroup)
// under conjugation; returned as the element list of a subgroup
std::vector<GroupElem> inertia_group(const Representation& rho, Rng& rng);

// restriction of the induced module back to the source subgroup matches the
// sum over double cosets of conjugated modules (checked up to isomorphism)
bool mackey_restriction_holds(const Representation& rho, Rng& rng,
                              std::string* detail = nullptr);
// adjunction between induction and restriction at the level of intertwiner
// space dimensions
bool frobenius_adjunction_holds(const Representation& rho, const Representation& V,
                                std::string* detail = nullptr);
// for W a module over the whole group and H normal: restricting to H and
// inducing back is tensoring with the permutation module on the cosets
bool induction_restriction_holds(const Representation& W, const Grp& H, Rng& rng,
                                 std::string* detail = nullptr);
// the permutation action on the cosets of H, one basis vector per coset
Representation coset_permutation_rep(const Grp& G, const Grp& H, const Fq& F);

}  // namespace qdd
