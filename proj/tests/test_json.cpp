#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdd/json_io.hpp"

using namespace qdd;

TEST_CASE("field serialization") {
  const Fq F3 = make_field(3, 1);
  const Json j3 = field_to_json(F3);
  CHECK(j3["p"] == 3);
  CHECK(j3["m"] == 1);
  CHECK(j3["modulus"] == Json::array({0, 1}));
  CHECK(field_from_json(j3)->same_field(*F3));

  const Fq F9 = make_field(3, 4);  // needs a primitive 4th root
  const Json j9 = field_to_json(F9);
  CHECK(j9["m"] == 2);
  CHECK(field_from_json(j9)->same_field(*F9));

  Json bad = j9;
  bad["modulus"] = Json::array({1, 2, 1});  // (x+1)^2 splits
  CHECK_THROWS_AS(field_from_json(bad), std::invalid_argument);
  bad = j9;
  bad["modulus"] = Json::array({1, 0, 0, 1});
  CHECK_THROWS_AS(field_from_json(bad), std::invalid_argument);
}

TEST_CASE("element and matrix serialization") {
  const Fq F9 = make_field(3, 4);
  for (i64 code = 0; code < F9->order(); ++code) {
    const FieldElem x = F9->from_code(code);
    const Json j = elem_to_json(F9, x);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(F9->code(elem_from_json(F9, j)) == code);
  }
  CHECK_THROWS_AS(elem_from_json(F9, Json::array({3, 0})), std::invalid_argument);
  CHECK_THROWS_AS(elem_from_json(F9, Json::array({0})), std::invalid_argument);

  Rng rng(5);
  const Matrix M = random_matrix(F9, 3, 4, rng);
  const Json jm = matrix_to_json(M);
  CHECK(jm["rows"] == 3);
  CHECK(jm["cols"] == 4);
  CHECK(matrix_from_json(F9, jm) == M);

  Json bad = jm;
  bad["entries"][0] = Json::array();
  CHECK_THROWS_AS(matrix_from_json(F9, bad), std::invalid_argument);
}

TEST_CASE("group element serialization") {
  const GroupElem g = gmul(6, g_rot(6, 4), g_b());
  const Json j = group_elem_to_json(g);
  CHECK(j["rot"] == 4);
  CHECK(j["flip"] == 1);
  CHECK(group_elem_from_json(j) == g);
  Json bad = j;
  bad["flip"] = 2;
  CHECK_THROWS_AS(group_elem_from_json(bad), std::invalid_argument);
}

TEST_CASE("representation round trip") {
  const auto P12 = DihedralParams::make(3, 12);
  const Fq F9 = make_field(3, P12.t);
  const Representation rho = omega(P12, F9, 2, 1).rep;

  const Json j = rep_to_json(rho);
  CHECK(j["group"]["p"] == 3);
  CHECK(j["group"]["n"] == 12);
  CHECK(j["degree"] == 4);
  const Representation back = rep_from_json(j);
  CHECK(back.degree == rho.degree);
  for (size_t k = 0; k < rho.gen_images.size(); ++k)
    CHECK(back.gen_images[k] == rho.gen_images[k]);

  Json nob = j;
  nob["generators"].erase("b");
  CHECK_THROWS_AS(rep_from_json(nob), std::invalid_argument);

  Json skew = j;
  skew["generators"]["b"] = matrix_to_json(Matrix::identity(F9, 4));
  CHECK_THROWS(rep_from_json(skew));  // the reflection relation breaks

  Json badp = j;
  badp["group"]["p"] = 5;
  CHECK_THROWS_AS(rep_from_json(badp), std::invalid_argument);
}

TEST_CASE("graded module round trip") {
  const auto P3 = DihedralParams::make(3, 3);
  const Fq F = make_field(3, 1);
  const auto cat = yd_catalog_odd(P3, F);
  for (const auto& e : cat) {
    const Json j = yd_to_json(e.yd);
    const YDModule back = yd_from_json(j);
    CHECK(back.grading == e.yd.grading);
    for (size_t k = 0; k < e.yd.rep.gen_images.size(); ++k)
      CHECK(back.rep.gen_images[k] == e.yd.rep.gen_images[k]);
  }

  Json j = yd_to_json(cat[6].yd);  // an induced entry with a nontrivial grading
  std::swap(j["grading"][0], j["grading"][1]);
  CHECK_THROWS_AS(yd_from_json(j), std::invalid_argument);
}

TEST_CASE("catalog files carry labels, provenance and class data") {
  const auto P3 = DihedralParams::make(3, 3);
  const Fq F = make_field(3, 1);

  const Json cj = catalog_to_json(full_catalog(P3, F));
  REQUIRE(cj.size() == 6);
  CHECK(cj[0]["label"] == "Phi(1,0,+)");
  for (const Json& e : cj) {
    CHECK(e["provenance"].is_string());
    CHECK(!e["provenance"].get<std::string>().empty());
  }

  const Json yj = yd_catalog_to_json(yd_catalog_odd(P3, F));
  REQUIRE(yj.size() == 11);
  CHECK(yj[6]["label"] == "DU(1)");
  CHECK(yj[6]["class"] == Json({{"rot", 0}, {"flip", 1}}));
  CHECK(yj[6]["dimension"] == 3);
  CHECK(yj[6]["yd"]["grading"].size() == 3);
}

TEST_CASE("serialization is deterministic and parse-stable") {
  const auto P6 = DihedralParams::make(3, 6);
  const Fq F = make_field(3, P6.t);
  const std::string once = dump_stable(yd_catalog_to_json(yd_catalog_even(P6, F)));
  const std::string twice = dump_stable(yd_catalog_to_json(yd_catalog_even(P6, F)));
  CHECK(once == twice);
  CHECK(dump_stable(Json::parse(once)) == once);
  CHECK(once.back() == '\n');
}

TEST_CASE("certificate serialization") {
  const auto P3 = DihedralParams::make(3, 3);
  const Fq F = make_field(3, 1);
  Rng rng(9);

  const auto good = indecomposability_certificate(phi(P3, F, 2, 0, +1).rep, rng);
  const Json jg = certificate_to_json(good);
  CHECK(jg["status"] == "certified");
  CHECK(!jg.contains("summands"));

  const Representation split =
      direct_sum(phi(P3, F, 1, 0, +1).rep, phi(P3, F, 1, 0, -1).rep);
  const auto dec = indecomposability_certificate(split, rng);
  const Json jd = certificate_to_json(dec);
  CHECK(jd["status"] == "decomposed");
  REQUIRE(jd["summands"].size() == 2);
  CHECK(jd["summands"][0]["rows"] == 2);
}
