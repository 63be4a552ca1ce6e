// command-line front end: exact catalogs of indecomposable modules over the
// dihedral group algebra in odd characteristic p | n, the matching catalog of
// graded modules over its quantum double, machine verification suites for
// both, and a decomposition service for module files
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdd/json_io.hpp"
#include "qdd/verify.hpp"

using namespace qdd;

namespace {

struct Options {
  i64 p = 3;
  i64 n = 3;
  std::uint64_t seed = 0;
  std::string out;
  std::string suite = "all";
  i64 budget_hopf_max_n = 12;
  i64 budget_samples = 64;
  std::string input;
};

VerifyBudget budget_of(const Options& o) {
  VerifyBudget b;
  b.hopf_max_n = o.budget_hopf_max_n;
  b.samples = o.budget_samples;
  return b;
}

// exit 2 on IO trouble is handled by the caller catching this
void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open for writing: " + path);
  f << bytes;
  if (!f.good()) throw std::invalid_argument("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open for reading: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const char* kind_name(CentralizerKind k) {
  switch (k) {
    case CentralizerKind::whole_group: return "whole group";
    case CentralizerKind::rotation_group: return "rotation subgroup";
    case CentralizerKind::klein_four: return "Klein four";
    case CentralizerKind::reflection_pair: return "reflection pair";
  }
  return "?";
}

int cmd_info(const Options& o) {
  const DihedralParams P = DihedralParams::make(o.p, o.n);
  const Fq F = make_field(P.p, P.t);
  std::ostringstream os;
  os << "p=" << P.p << " n=" << P.n << " s=" << P.s << " t=" << P.t
     << " p^s=" << P.ps << "\n";
  os << "coefficient field: F_" << P.p;
  if (F->m() > 1) os << "^" << F->m();
  os << " (smallest field with a primitive root of unity of order " << P.t
     << ")\n";
  const auto classes = conjugacy_classes(P.n);
  os << "conjugacy classes (" << classes.size() << "):\n";
  for (const ConjClass& C : classes) {
    const auto Z = centralizer(P.n, C.rep);
    os << "  " << elem_to_string(C.rep) << ": size " << C.members.size()
       << ", centralizer " << kind_name(centralizer_kind(P.n, C.rep)) << " (order "
       << Z.size() << ")\n";
  }
  os << "kD_n indecomposables: " << expected_count(P) << "\n";
  os << "YD indecomposables: " << expected_yd_count(P) << "\n";
  std::cout << os.str();

  if (!o.out.empty()) {
    Json j;
    j["p"] = P.p;
    j["n"] = P.n;
    j["s"] = P.s;
    j["t"] = P.t;
    j["ps"] = P.ps;
    j["field"] = field_to_json(F);
    j["classes"] = Json::array();
    for (const ConjClass& C : classes) {
      Json c;
      c["rep"] = group_elem_to_json(C.rep);
      c["size"] = static_cast<i64>(C.members.size());
      c["centralizer_order"] = static_cast<i64>(centralizer(P.n, C.rep).size());
      j["classes"].push_back(std::move(c));
    }
    j["indecomposables"] = expected_count(P);
    j["graded_indecomposables"] = expected_yd_count(P);
    write_file(o.out, dump_stable(j));
  }
  return 0;
}

int cmd_catalog(const Options& o) {
  const DihedralParams P = DihedralParams::make(o.p, o.n);
  const Fq F = make_field(P.p, P.t);
  const auto cat = full_catalog(P, F);
  const std::string path = o.out.empty() ? "catalog.json" : o.out;
  write_file(path, dump_stable(catalog_to_json(cat)));
  std::cout << "wrote " << cat.size() << " modules to " << path << "\n";
  return 0;
}

int cmd_yd_catalog(const Options& o) {
  const DihedralParams P = DihedralParams::make(o.p, o.n);
  const Fq F = make_field(P.p, P.t);
  const auto cat = full_yd_catalog(P, F);
  const std::string path = o.out.empty() ? "yd-catalog.json" : o.out;
  write_file(path, dump_stable(yd_catalog_to_json(cat)));
  std::cout << "wrote " << cat.size() << " graded modules to " << path << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const DihedralParams P = DihedralParams::make(o.p, o.n);
  const Fq F = make_field(P.p, P.t);
  Rng rng(o.seed);
  const std::vector<SuiteReport> reports = run_suites(o.suite, P, F, rng, budget_of(o));

  bool ok = true;
  for (const SuiteReport& r : reports) {
    std::cout << format_report(r);
    ok = ok && r.ok();
  }
  std::cout << (ok ? "verify: pass" : "verify: FAIL") << "\n";

  if (!o.out.empty()) {
    Json j = Json::array();
    for (const SuiteReport& r : reports) {
      Json s;
      s["suite"] = r.suite;
      s["checks"] = Json::array();
      for (const CheckResult& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["ok"] = c.ok;
        e["detail"] = c.detail;
        s["checks"].push_back(std::move(e));
      }
      j.push_back(std::move(s));
    }
    write_file(o.out, dump_stable(j));
  }
  return ok ? 0 : 1;
}

int cmd_decompose(const Options& o) {
  Json j;
  try {
    j = Json::parse(read_file(o.input));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
  Rng rng(o.seed);

  // a single catalog entry wraps its module under "rep" (plain) or "yd"
  // (graded); accept the entry as written
  if (j.is_object() && j.contains("yd") && j["yd"].is_object())
    j = j["yd"];
  else if (j.is_object() && j.contains("rep") && j["rep"].is_object())
    j = j["rep"];

  LabeledDecomposition dec;
  if (j.is_object() && j.contains("grading")) {
    const YDModule M = yd_from_json(j);
    const DihedralParams P = DihedralParams::make(M.rep.F->p(), M.rep.G->n);
    const auto cat = full_yd_catalog(P, M.rep.F);
    dec = decompose_against_yd_catalog(M, cat, rng);
  } else {
    const Representation V = rep_from_json(j);
    const DihedralParams P = DihedralParams::make(V.F->p(), V.G->n);
    const auto cat = full_catalog(P, V.F);
    dec = decompose_against_catalog(V, cat, rng);
  }

  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < dec.labels.size(); ++i)
    os << (i ? ", " : "") << dec.labels[i];
  os << "}";
  std::cout << os.str() << "\n";

  if (!o.out.empty()) {
    Json r;
    r["labels"] = dec.labels;
    r["complete"] = dec.complete;
    r["certified"] = dec.certified;
    write_file(o.out, dump_stable(r));
  }

  if (!dec.complete || !dec.certified) {
    std::cout << "inconclusive: " << (dec.detail.empty() ? "decomposition not fully certified" : dec.detail)
              << "\n";
    return 3;
  }
  return 0;
}

int cmd_hopf_check(const Options& o) {
  if (o.n < 1 || o.p < 2 || o.p % 2 == 0)
    throw std::invalid_argument("hopf-check needs an odd prime p and n >= 1");
  if (o.n > o.budget_hopf_max_n)
    throw std::invalid_argument(
        "refusing a sweep with n=" + std::to_string(o.n) +
        " above --budget-hopf-max-n=" + std::to_string(o.budget_hopf_max_n));
  const HopfReport hr = verify_hopf(o.p, o.n);
  for (const AxiomCheck& ax : hr.axioms) {
    std::cout << ax.name << ": " << (ax.ok ? "pass" : "fail");
    if (ax.ok)
      std::cout << " (" << ax.instances << " instances)";
    else
      std::cout << " (fails at " << ax.failure << ")";
    std::cout << "\n";
  }
  std::cout << (hr.ok ? "hopf-check: pass" : "hopf-check: FAIL") << "\n";
  return hr.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact catalogs and machine verification for the indecomposable modules\n"
      "over dihedral group algebras in odd characteristic p (with p | n) and\n"
      "for the graded modules over their quantum doubles.\n"
      "Every flag can also come from the environment with the QDD_ prefix\n"
      "(QDD_P, QDD_N, QDD_SEED, QDD_OUT, QDD_SUITE, QDD_BUDGET_HOPF_MAX_N,\n"
      "QDD_BUDGET_SAMPLES).\n"
      "exit codes: 0 pass, 1 verification failure, 2 invalid input or I/O\n"
      "error, 3 inconclusive decomposition"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub, bool with_params) {
    if (with_params) {
      sub->add_option("--p", o.p, "odd characteristic, must divide n")
          ->envname("QDD_P");
      sub->add_option("--n", o.n, "half the order of the dihedral group")
          ->envname("QDD_N");
    }
    sub->add_option("--seed", o.seed, "seed for the deterministic sampler (default 0)")
        ->envname("QDD_SEED");
    sub->add_option("--out", o.out, "write a JSON result to this path")
        ->envname("QDD_OUT");
    sub->add_option("--budget-hopf-max-n", o.budget_hopf_max_n,
                    "largest n for full basis-table sweeps (default 12)")
        ->envname("QDD_BUDGET_HOPF_MAX_N");
    sub->add_option("--budget-samples", o.budget_samples,
                    "random-probe budget for the sampling checks (default 64)")
        ->envname("QDD_BUDGET_SAMPLES");
  };

  auto* info = app.add_subcommand(
      "info", "print s, t, the conjugacy classes with their centralizers, and the expected module counts");
  add_common(info, true);

  auto* catalog = app.add_subcommand(
      "catalog", "write every indecomposable module of the dihedral group algebra as JSON");
  add_common(catalog, true);

  auto* ydcat = app.add_subcommand(
      "yd-catalog", "write every indecomposable graded module over the quantum double as JSON");
  add_common(ydcat, true);

  auto* verify = app.add_subcommand("verify", "run an invariant suite and report each check");
  add_common(verify, true);
  verify
      ->add_option("--suite", o.suite,
                   "matrices | catalog | hopf | yd | mackey | all (default all)")
      ->envname("QDD_SUITE");

  auto* decompose = app.add_subcommand(
      "decompose", "read a module file (plain or graded) and print its label multiset");
  decompose->add_option("file", o.input, "JSON module file")->required();
  add_common(decompose, false);

  auto* hopf = app.add_subcommand(
      "hopf-check", "sweep the bialgebra and antipode identities of the double over F_p");
  add_common(hopf, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(info)) return cmd_info(o);
    if (app.got_subcommand(catalog)) return cmd_catalog(o);
    if (app.got_subcommand(ydcat)) return cmd_yd_catalog(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
    if (app.got_subcommand(decompose)) return cmd_decompose(o);
    if (app.got_subcommand(hopf)) return cmd_hopf_check(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification cross-check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
