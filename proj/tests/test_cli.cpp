#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qdd/json_io.hpp"

using namespace qdd;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qdd_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream f(p, std::ios::binary);
  f << bytes;
}

// run the binary under test with the given arguments, capturing both streams
RunResult run(const std::string& args) {
  const char* bin = std::getenv("QDD_BIN");
  REQUIRE(bin != nullptr);
  static int counter = 0;
  const fs::path out = work_dir() / ("stdout." + std::to_string(counter));
  const fs::path err = work_dir() / ("stderr." + std::to_string(counter));
  ++counter;
  const std::string cmd = "'" + std::string(bin) + "' " + args + " > '" +
                          out.string() + "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("info prints the numeric profile and both expected counts") {
  RunResult r = run("info --p 3 --n 9");
  CHECK(r.code == 0);
  CHECK(r.out.find("s=2 t=1") != std::string::npos);
  CHECK(r.out.find("kD_n indecomposables: 18") != std::string::npos);
  CHECK(r.out.find("YD indecomposables: 56") != std::string::npos);
  CHECK(r.out.find("centralizer reflection pair (order 2)") != std::string::npos);

  RunResult even = run("info --p 3 --n 12");
  CHECK(even.code == 0);
  CHECK(even.out.find("kD_n indecomposables: 15") != std::string::npos);
}

TEST_CASE("invalid parameters exit with code 2 and a message") {
  RunResult r = run("info --p 3 --n 4");
  CHECK(r.code == 2);
  CHECK(r.err.find("p does not divide n") != std::string::npos);

  RunResult even_p = run("info --p 2 --n 4");
  CHECK(even_p.code == 2);
  CHECK(even_p.err.find("odd prime") != std::string::npos);

  RunResult bogus = run("verify --p 3 --n 3 --suite bogus");
  CHECK(bogus.code == 2);
  CHECK(bogus.err.find("unknown suite") != std::string::npos);

  RunResult nocmd = run("");
  CHECK(nocmd.code == 2);
}

TEST_CASE("catalog files are byte-identical across reruns") {
  const fs::path a = work_dir() / "cat_a.json";
  const fs::path b = work_dir() / "cat_b.json";
  CHECK(run("catalog --p 3 --n 3 --out '" + a.string() + "'").code == 0);
  CHECK(run("catalog --p 3 --n 3 --out '" + b.string() + "'").code == 0);
  const std::string bytes = slurp(a);
  CHECK(bytes == slurp(b));
  CHECK(!bytes.empty());

  const Json cat = Json::parse(bytes);
  CHECK(cat.size() == 6);
  CHECK(cat[0]["label"] == "Phi(1,0,+)");

  const fs::path y = work_dir() / "yd_a.json";
  const fs::path z = work_dir() / "yd_b.json";
  CHECK(run("yd-catalog --p 3 --n 3 --out '" + y.string() + "'").code == 0);
  CHECK(run("yd-catalog --p 3 --n 3 --out '" + z.string() + "'").code == 0);
  CHECK(slurp(y) == slurp(z));
  const Json yd = Json::parse(slurp(y));
  CHECK(yd.size() == 11);
  CHECK(yd[6]["label"] == "DU(1)");
  CHECK(yd[6]["class"] == Json({{"rot", 0}, {"flip", 1}}));
}

TEST_CASE("verify runs a suite, reports named checks, and honors the seed") {
  RunResult r = run("verify --p 3 --n 3 --suite all --seed 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("T²=I: pass") != std::string::npos);
  CHECK(r.out.find("pairing i+j=t: pass (vacuous, t=1)") != std::string::npos);
  CHECK(r.out.find("verify: pass") != std::string::npos);

  const fs::path j1 = work_dir() / "verify1.json";
  const fs::path j2 = work_dir() / "verify2.json";
  CHECK(run("verify --p 3 --n 3 --suite matrices --seed 5 --out '" + j1.string() + "'")
            .code == 0);
  CHECK(run("verify --p 3 --n 3 --suite matrices --seed 5 --out '" + j2.string() + "'")
            .code == 0);
  CHECK(slurp(j1) == slurp(j2));
  const Json rep = Json::parse(slurp(j1));
  CHECK(rep.size() == 1);
  CHECK(rep[0]["suite"] == "matrices");
  CHECK(rep[0]["checks"].size() == 6);
  for (const auto& c : rep[0]["checks"]) CHECK(c["ok"] == true);
}

TEST_CASE("environment variables stand in for flags") {
  const char* bin = std::getenv("QDD_BIN");
  REQUIRE(bin != nullptr);
  const fs::path out = work_dir() / "env_stdout.txt";
  const std::string cmd = "QDD_P=3 QDD_N=6 '" + std::string(bin) + "' info > '" +
                          out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(slurp(out).find("kD_n indecomposables: 12") != std::string::npos);
}

TEST_CASE("decompose names catalog summands exactly") {
  const auto P = DihedralParams::make(3, 3);
  const Fq F = make_field(3, P.t);

  // a catalog entry comes back as itself
  const fs::path entry = work_dir() / "entry.json";
  spit(entry, dump_stable(rep_to_json(phi(P, F, 2, 0, +1).rep)));
  RunResult r1 = run("decompose '" + entry.string() + "'");
  CHECK(r1.code == 0);
  CHECK(r1.out == "{Phi(2,0,+)}\n");

  // the regular module splits into the two top-rank sign lifts
  const fs::path reg = work_dir() / "regular.json";
  spit(reg, dump_stable(rep_to_json(regular_rep(dihedral_group(3), F))));
  RunResult r2 = run("decompose '" + reg.string() + "' --seed 3");
  CHECK(r2.code == 0);
  CHECK(r2.out == "{Phi(3,0,+), Phi(3,0,-)}\n");

  // an induced exponent-zero module splits into the two sign lifts
  const fs::path ind = work_dir() / "induced.json";
  spit(ind, dump_stable(rep_to_json(induce(rho_cyclic(P, F, 2, 0)))));
  RunResult r3 = run("decompose '" + ind.string() + "'");
  CHECK(r3.code == 0);
  CHECK(r3.out == "{Phi(2,0,+), Phi(2,0,-)}\n");

  // a graded module file routes through the graded catalog
  const auto ydcat = full_yd_catalog(P, F);
  const fs::path graded = work_dir() / "graded.json";
  spit(graded, dump_stable(yd_to_json(yd_direct_sum(ydcat[6].yd, ydcat[8].yd))));
  RunResult r4 = run("decompose '" + graded.string() + "'");
  CHECK(r4.code == 0);
  CHECK(r4.out == "{" + ydcat[8].label + ", " + ydcat[6].label + "}\n");  // sorted

  // an entry cut straight out of a written catalog file also works: the
  // module sits under "rep" (plain) or "yd" (graded) inside the entry
  const fs::path cat_file = work_dir() / "cat33.json";
  RunResult rc = run("catalog --p 3 --n 3 --out '" + cat_file.string() + "'");
  CHECK(rc.code == 0);
  const Json cat_json = Json::parse(slurp(cat_file));
  const fs::path wrapped = work_dir() / "wrapped.json";
  spit(wrapped, cat_json[2].dump());
  RunResult r6 = run("decompose '" + wrapped.string() + "'");
  CHECK(r6.code == 0);
  CHECK(r6.out == "{" + cat_json[2]["label"].get<std::string>() + "}\n");

  const fs::path ycat_file = work_dir() / "ycat33.json";
  RunResult ry = run("yd-catalog --p 3 --n 3 --out '" + ycat_file.string() + "'");
  CHECK(ry.code == 0);
  const Json ycat_json = Json::parse(slurp(ycat_file));
  const fs::path ywrapped = work_dir() / "ywrapped.json";
  spit(ywrapped, ycat_json[5].dump());
  RunResult r7 = run("decompose '" + ywrapped.string() + "'");
  CHECK(r7.code == 0);
  CHECK(r7.out == "{" + ycat_json[5]["label"].get<std::string>() + "}\n");

  // labels land in a JSON report when asked
  const fs::path rep_out = work_dir() / "dec.json";
  RunResult r5 = run("decompose '" + reg.string() + "' --out '" + rep_out.string() + "'");
  CHECK(r5.code == 0);
  const Json j = Json::parse(slurp(rep_out));
  CHECK(j["labels"] == Json({"Phi(3,0,+)", "Phi(3,0,-)"}));
  CHECK(j["complete"] == true);
  CHECK(j["certified"] == true);
}

TEST_CASE("decompose rejects malformed input with exit 2") {
  const fs::path bad = work_dir() / "bad.json";
  spit(bad, "{ not json");
  RunResult r = run("decompose '" + bad.string() + "'");
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);

  const fs::path missing = work_dir() / "missing.json";
  RunResult r2 = run("decompose '" + missing.string() + "'");
  CHECK(r2.code == 2);

  // structurally valid JSON that is not a module is rejected too
  const fs::path notmod = work_dir() / "notmod.json";
  spit(notmod, "{\"rows\": 1}\n");
  RunResult r3 = run("decompose '" + notmod.string() + "'");
  CHECK(r3.code == 2);
}

TEST_CASE("hopf-check prints the axiom table and honors its budget") {
  RunResult r = run("hopf-check --p 3 --n 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("associativity: pass (46656 instances)") != std::string::npos);
  CHECK(r.out.find("hopf-check: pass") != std::string::npos);

  RunResult over = run("hopf-check --p 3 --n 15");
  CHECK(over.code == 2);
  CHECK(over.err.find("budget") != std::string::npos);

  RunResult raised = run("hopf-check --p 5 --n 15 --budget-hopf-max-n 15");
  CHECK(raised.code == 0);
}
