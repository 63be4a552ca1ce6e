#pragma once

#include <string>
#include <vector>

#include "qdd/catalog.hpp"
#include "qdd/qdouble.hpp"

namespace qdd {

struct YDCatalogEntry {
  std::string label;
  GroupElem cls;  // representative of the conjugacy class carrying the grading
  YDModule yd;
};

// every indecomposable graded module up to graded isomorphism, one block of
// entries per conjugacy class: the trivially graded dihedral families, the
// central twist of those for even n, the inductions from the reflection
// centralizers, and the inductions from the rotation subgroup
std::vector<YDCatalogEntry> yd_catalog_odd(const DihedralParams& P, const Fq& F);
std::vector<YDCatalogEntry> yd_catalog_even(const DihedralParams& P, const Fq& F);
std::vector<YDCatalogEntry> full_yd_catalog(const DihedralParams& P, const Fq& F);

// class-by-class sum of centralizer module counts
i64 expected_yd_count(const DihedralParams& P);

struct YDCompletenessReport {
  bool ok = true;
  i64 expected = 0;
  i64 actual = 0;
  i64 probe_summands = 0;  // closure probe: summands landed on catalog labels
  std::string failure;     // first failure, names the entry or pair
};

// count + pairwise non-isomorphism + per-entry indecomposability + a closure
// probe decomposing twisted/induced/summed modules back onto catalog labels.
// injected (if given) replaces the freshly built catalog, so corrupted
// catalogs can be shown to fail
YDCompletenessReport verify_yd_completeness(
    const DihedralParams& P, const Fq& F, Rng& rng, int probes = 10,
    const std::vector<YDCatalogEntry>* injected = nullptr);

// tensor with the one-dimensional sign module (trivially graded)
YDModule sign_twist(const YDModule& M);

// random graded change of basis (one invertible block per degree); the
// result is re-verified and isomorphic to the input as a graded module
YDModule yd_scramble(const YDModule& M, Rng& rng);

// a small random module over the centralizer of g, for closure probes
Representation random_centralizer_module(const DihedralParams& P, const Fq& F,
                                         const GroupElem& g, Rng& rng);

LabeledDecomposition decompose_against_yd_catalog(
    const YDModule& M, const std::vector<YDCatalogEntry>& catalog, Rng& rng);

}  // namespace qdd
