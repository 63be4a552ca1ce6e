#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "qdd/verify.hpp"

using namespace qdd;

namespace {

const CheckResult& check_named(const SuiteReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks)
    if (c.name == name) return c;
  FAIL("missing check: " << name);
  static CheckResult dummy;
  return dummy;
}

void require_all_pass(const SuiteReport& rep) {
  for (const CheckResult& c : rep.checks) {
    INFO(rep.suite << " / " << c.name << " (" << c.detail << ")");
    CHECK(c.ok);
  }
  CHECK(rep.ok());
}

}  // namespace

TEST_CASE("matrix identity suite passes for odd and even t") {
  for (auto [p, n] : {std::pair<i64, i64>{3, 9}, {3, 12}, {5, 10}}) {
    auto P = DihedralParams::make(p, n);
    Fq F = make_field(p, P.t);
    SuiteReport rep = run_suite_matrices(P, F);
    CHECK(rep.suite == "matrices");
    CHECK(rep.checks.size() == 6);
    require_all_pass(rep);
    if (P.t % 2 == 1) {
      CHECK(check_named(rep, "T₁²=I").detail == "vacuous, t odd");
    } else {
      CHECK(check_named(rep, "T₁²=I").detail.find("vacuous") == std::string::npos);
    }
  }
}

TEST_CASE("catalog suite passes and reports vacuous pairing at t=1") {
  auto P = DihedralParams::make(3, 9);
  Fq F = make_field(3, P.t);
  Rng rng(11);
  VerifyBudget budget;
  budget.samples = 16;
  SuiteReport rep = run_suite_catalog(P, F, rng, budget);
  require_all_pass(rep);
  CHECK(check_named(rep, "count formula").detail.find("18 modules") == 0);
  CHECK(check_named(rep, "pairing i+j=t").detail == "vacuous, t=1");
  CHECK(check_named(rep, "simples = p-regular classes").detail ==
        "2 simples, 2 regular classes");
}

TEST_CASE("catalog suite exercises the pairing when t is large") {
  auto P = DihedralParams::make(3, 12);
  Fq F = make_field(3, P.t);
  Rng rng(12);
  VerifyBudget budget;
  budget.samples = 16;
  SuiteReport rep = run_suite_catalog(P, F, rng, budget);
  require_all_pass(rep);
  const CheckResult& pairing = check_named(rep, "pairing i+j=t");
  CHECK(pairing.detail.find("pairs") != std::string::npos);
  CHECK(check_named(rep, "simples = p-regular classes").detail ==
        "5 simples, 5 regular classes");
}

TEST_CASE("hopf suite runs the axioms and the corrupted control") {
  auto P = DihedralParams::make(3, 3);
  VerifyBudget budget;
  SuiteReport rep = run_suite_hopf(P, budget);
  CHECK(rep.checks.size() == 8);  // seven axioms plus the negative control
  require_all_pass(rep);
  const CheckResult& control = check_named(rep, "corrupted product table is detected");
  CHECK(control.detail.find("associativity fails at") == 0);
}

TEST_CASE("hopf suite skips oversized sweeps but keeps the control") {
  auto P = DihedralParams::make(7, 21);
  VerifyBudget budget;  // hopf_max_n = 12 < 21
  SuiteReport rep = run_suite_hopf(P, budget);
  CHECK(rep.checks.size() == 2);
  require_all_pass(rep);
  CHECK(rep.checks[0].detail.find("skipped") != std::string::npos);
}

TEST_CASE("graded suite passes end to end on the smallest parameters") {
  auto P = DihedralParams::make(3, 3);
  Fq F = make_field(3, P.t);
  Rng rng(21);
  VerifyBudget budget;
  budget.samples = 16;
  SuiteReport rep = run_suite_yd(P, F, rng, budget);
  require_all_pass(rep);
  CHECK(check_named(rep, "graded count formula").detail.find("11 modules") == 0);
  CHECK(check_named(rep, "module axioms over the double").detail == "11 modules");
  CHECK(check_named(rep, "reflection-class simples generated by every vector").detail ==
        "2 modules");
}

TEST_CASE("induction suite passes, including the even-t variant") {
  VerifyBudget budget;
  budget.samples = 16;
  {
    auto P = DihedralParams::make(3, 3);
    Fq F = make_field(3, P.t);
    Rng rng(31);
    SuiteReport rep = run_suite_mackey(P, F, rng, budget);
    require_all_pass(rep);
    CHECK(check_named(rep, "induce(rho(r,t/2)) = {Phi(r,t/2,+), Phi(r,t/2,-)}").detail ==
          "vacuous, t odd");
  }
  {
    auto P = DihedralParams::make(3, 6);
    Fq F = make_field(3, P.t);
    Rng rng(32);
    SuiteReport rep = run_suite_mackey(P, F, rng, budget);
    require_all_pass(rep);
    CHECK(check_named(rep, "induce(rho(r,t/2)) = {Phi(r,t/2,+), Phi(r,t/2,-)}").detail.find(
              "vacuous") == std::string::npos);
  }
}

TEST_CASE("suite dispatcher composes suites and rejects unknown names") {
  auto P = DihedralParams::make(3, 3);
  Fq F = make_field(3, P.t);
  Rng rng(41);
  VerifyBudget budget;
  budget.samples = 16;

  auto only_matrices = run_suites("matrices", P, F, rng, budget);
  CHECK(only_matrices.size() == 1);
  CHECK(only_matrices[0].suite == "matrices");

  auto catalog = run_suites("catalog", P, F, rng, budget);
  CHECK(catalog.size() == 2);
  CHECK(catalog[0].suite == "matrices");
  CHECK(catalog[1].suite == "catalog");

  auto all = run_suites("all", P, F, rng, budget);
  CHECK(all.size() == 5);
  CHECK(all[0].suite == "matrices");
  CHECK(all[4].suite == "mackey");
  for (const SuiteReport& rep : all) require_all_pass(rep);

  CHECK_THROWS_AS(static_cast<void>(run_suites("bogus", P, F, rng, budget)),
                  std::invalid_argument);
}

TEST_CASE("report formatting matches the pass/fail line grammar") {
  auto P = DihedralParams::make(3, 9);
  Fq F = make_field(3, P.t);
  Rng rng(51);
  VerifyBudget budget;
  budget.samples = 16;

  const std::string matrices = format_report(run_suite_matrices(P, F));
  CHECK(matrices.find("[matrices]\n") == 0);
  CHECK(matrices.find("T²=I: pass") != std::string::npos);
  CHECK(matrices.find("T₁²=I: pass (vacuous, t odd)") != std::string::npos);
  CHECK(matrices.find("6/6 checks pass") != std::string::npos);

  const std::string catalog = format_report(run_suite_catalog(P, F, rng, budget));
  CHECK(catalog.find("pairing i+j=t: pass (vacuous, t=1)") != std::string::npos);

  SuiteReport fake;
  fake.suite = "demo";
  fake.checks.push_back(CheckResult{"broken identity", false, "fails at r=2"});
  const std::string text = format_report(fake);
  CHECK(text.find("broken identity: fail (fails at r=2)") != std::string::npos);
  CHECK(text.find("0/1 checks pass") != std::string::npos);
  CHECK_FALSE(fake.ok());
}
