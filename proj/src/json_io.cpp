#include "qdd/json_io.hpp"

#include <stdexcept>

namespace qdd {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

i64 int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    reject(std::string("missing integer field \"") + key + "\"");
  }
  return j.at(key).get<i64>();
}

}  // namespace

Json field_to_json(const Fq& F) {
  Json j;
  j["p"] = F->p();
  j["m"] = F->m();
  j["modulus"] = F->modulus();
  return j;
}

Fq field_from_json(const Json& j) {
  const i64 p = int_field(j, "p");
  const i64 m = int_field(j, "m");
  if (!j.contains("modulus") || !j.at("modulus").is_array()) reject("modulus missing");
  std::vector<i64> mod;
  for (const Json& c : j.at("modulus")) {
    if (!c.is_number_integer()) reject("modulus coefficients must be integers");
    mod.push_back(c.get<i64>());
  }
  if (static_cast<i64>(mod.size()) != m + 1) reject("modulus length differs from m+1");
  return std::make_shared<FieldCtx>(FieldCtx::with_modulus(p, std::move(mod)));
}

Json elem_to_json(const Fq& F, const FieldElem& x) {
  Json out = Json::array();
  i64 code = F->code(x);
  for (int i = 0; i < F->m(); ++i) {
    out.push_back(code % F->p());
    code /= F->p();
  }
  return out;
}

FieldElem elem_from_json(const Fq& F, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != F->m())
    reject("element must be a coefficient list of length m");
  i64 code = 0;
  for (int i = F->m() - 1; i >= 0; --i) {
    if (!j[static_cast<size_t>(i)].is_number_integer())
      reject("element coefficients must be integers");
    const i64 c = j[static_cast<size_t>(i)].get<i64>();
    if (c < 0 || c >= F->p()) reject("element coefficient out of range");
    code = code * F->p() + c;
  }
  return F->from_code(code);
}

Json matrix_to_json(const Matrix& M) {
  Json j;
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  Json rows = Json::array();
  for (int r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(elem_to_json(M.field(), M.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const Fq& F, const Json& j) {
  const i64 rows = int_field(j, "rows");
  const i64 cols = int_field(j, "cols");
  if (rows < 0 || cols < 0 || rows > 4096 || cols > 4096) reject("matrix size out of range");
  if (!j.contains("entries") || !j.at("entries").is_array() ||
      static_cast<i64>(j.at("entries").size()) != rows)
    reject("entries row count differs from rows");
  Matrix M(F, static_cast<int>(rows), static_cast<int>(cols));
  for (i64 r = 0; r < rows; ++r) {
    const Json& row = j.at("entries")[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<i64>(row.size()) != cols)
      reject("entries column count differs from cols");
    for (i64 c = 0; c < cols; ++c)
      M.set(static_cast<int>(r), static_cast<int>(c),
            elem_from_json(F, row[static_cast<size_t>(c)]));
  }
  return M;
}

Json group_elem_to_json(const GroupElem& g) {
  Json j;
  j["rot"] = g.rot;
  j["flip"] = g.flip;
  return j;
}

GroupElem group_elem_from_json(const Json& j) {
  const i64 rot = int_field(j, "rot");
  const i64 flip = int_field(j, "flip");
  if (flip != 0 && flip != 1) reject("flip must be 0 or 1");
  if (rot < 0) reject("rot must be nonnegative");
  return {rot, flip};
}

Json rep_to_json(const Representation& rho) {
  Json j;
  j["group"] = {{"p", rho.F->p()}, {"n", rho.G->n}};
  j["degree"] = rho.degree;
  j["field"] = field_to_json(rho.F);
  Json gens;
  for (size_t k = 0; k < rho.G->gens.size(); ++k) {
    const char* key = rho.G->gens[k].flip ? "b" : "a";
    if (gens.contains(key)) reject("group has two generators of the same kind");
    gens[key] = matrix_to_json(rho.gen_images[k]);
  }
  j["generators"] = std::move(gens);
  return j;
}

Representation rep_from_json(const Json& j) {
  if (!j.contains("group")) reject("group missing");
  const i64 p = int_field(j.at("group"), "p");
  const i64 n = int_field(j.at("group"), "n");
  DihedralParams::make(p, n);  // validates the (p, n) pair
  const Fq F = field_from_json(j.at("field"));
  if (F->p() != p) reject("field characteristic differs from group parameter p");
  if (!j.contains("generators")) reject("generators missing");
  const Json& gens = j.at("generators");
  if (!gens.contains("a") || !gens.contains("b"))
    reject("expected generators \"a\" and \"b\" of the full dihedral group");
  const Matrix A = matrix_from_json(F, gens.at("a"));
  const Matrix B = matrix_from_json(F, gens.at("b"));
  const i64 d = int_field(j, "degree");
  if (A.rows() != d || B.rows() != d) reject("generator size differs from degree");
  return make_rep(dihedral_group(n), F, {A, B}, true);
}

Json yd_to_json(const YDModule& M) {
  Json j = rep_to_json(M.rep);
  Json grading = Json::array();
  for (const GroupElem& g : M.grading) grading.push_back(group_elem_to_json(g));
  j["grading"] = std::move(grading);
  return j;
}

YDModule yd_from_json(const Json& j) {
  YDModule M;
  M.rep = rep_from_json(j);
  if (!j.contains("grading") || !j.at("grading").is_array()) reject("grading missing");
  for (const Json& g : j.at("grading")) M.grading.push_back(group_elem_from_json(g));
  const CheckReport chk = yd_check(M);
  if (!chk.ok) reject("grading rejected: " + chk.failure);
  return M;
}

Json catalog_to_json(const std::vector<CatalogEntry>& cat) {
  Json out = Json::array();
  for (const CatalogEntry& e : cat) {
    Json j;
    j["label"] = e.label;
    j["provenance"] = e.note;
    j["rep"] = rep_to_json(e.rep);
    out.push_back(std::move(j));
  }
  return out;
}

Json yd_catalog_to_json(const std::vector<YDCatalogEntry>& cat) {
  Json out = Json::array();
  for (const YDCatalogEntry& e : cat) {
    Json j;
    j["label"] = e.label;
    j["class"] = group_elem_to_json(e.cls);
    j["dimension"] = e.yd.rep.degree;
    j["yd"] = yd_to_json(e.yd);
    out.push_back(std::move(j));
  }
  return out;
}

Json certificate_to_json(const IndecompCertificate& c) {
  Json j;
  switch (c.status) {
    case IndecompCertificate::Status::certified:
      j["status"] = "certified";
      break;
    case IndecompCertificate::Status::decomposed:
      j["status"] = "decomposed";
      break;
    case IndecompCertificate::Status::inconclusive:
      j["status"] = "inconclusive";
      break;
  }
  if (c.summands) {
    j["summands"] = Json::array(
        {matrix_to_json(c.summands->first), matrix_to_json(c.summands->second)});
  }
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qdd
