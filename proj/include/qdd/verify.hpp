#pragma once
#include <string>
#include <vector>

#include "qdd/catalog.hpp"
#include "qdd/yd_catalog.hpp"

namespace qdd {

// one verified statement; `detail` is appended to the report line in
// parentheses (sample sizes, vacuity notes, or the failing instance)
struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
};

// knobs for the expensive sweeps; both have documented defaults
struct VerifyBudget {
  i64 hopf_max_n = 12;  // full basis-table sweeps run only for n <= this
  i64 samples = 64;     // random-probe budget shared by the sampling checks
};

// closed-form matrix identities: involutions, similarity relations, the
// entrywise inverse, and the change of basis between opposite exponents
SuiteReport run_suite_matrices(const DihedralParams& P, const Fq& F);
// the module catalog: count, indecomposability, pairwise distinction, the
// exponent pairing on induced modules, intertwiner-dimension symmetry, the
// simple sublist against the regular classes, the tensor factorization of
// the cyclic modules, and random decomposition probes
SuiteReport run_suite_catalog(const DihedralParams& P, const Fq& F, Rng& rng,
                              const VerifyBudget& budget);
// bialgebra and antipode identities of the double, plus a corrupted-table
// negative control that must be caught
SuiteReport run_suite_hopf(const DihedralParams& P, const VerifyBudget& budget);
// the graded catalog: count, module axioms, gradings, indecomposability,
// pairwise distinction, the induction dictionary, generation properties,
// and closure probes
SuiteReport run_suite_yd(const DihedralParams& P, const Fq& F, Rng& rng,
                         const VerifyBudget& budget);
// induction machinery: splitting of the exponent-zero inductions, the
// inertia dichotomy, double-coset restriction, restriction-induction as a
// tensor identity, the hom-dimension adjunction, and additivity
SuiteReport run_suite_mackey(const DihedralParams& P, const Fq& F, Rng& rng,
                             const VerifyBudget& budget);

// which in {matrices, catalog, hopf, yd, mackey, all}; "catalog" also runs
// the matrix suite its entries are built from; unknown names throw
std::vector<SuiteReport> run_suites(const std::string& which, const DihedralParams& P,
                                    const Fq& F, Rng& rng, const VerifyBudget& budget);

// "<name>: pass" / "<name>: fail (<detail>)" lines, one per check, plus a
// suite header and summary line
std::string format_report(const SuiteReport& report);

}  // namespace qdd
