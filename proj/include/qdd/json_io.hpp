#pragma once

#include <string>

#include "json.hpp"
#include "qdd/catalog.hpp"
#include "qdd/yd_catalog.hpp"

namespace qdd {

// insertion-ordered so serialized output is stable byte-for-byte
using Json = nlohmann::ordered_json;

Json field_to_json(const Fq& F);
Fq field_from_json(const Json& j);

// coefficient list of length m, entry i multiplying x^i
Json elem_to_json(const Fq& F, const FieldElem& x);
FieldElem elem_from_json(const Fq& F, const Json& j);

Json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const Fq& F, const Json& j);

Json group_elem_to_json(const GroupElem& g);
GroupElem group_elem_from_json(const Json& j);

// generators keyed "a" (rotation) and "b" (reflection); groups with a single
// generator emit a single key
Json rep_to_json(const Representation& rho);
// accepts only modules of the full dihedral group ("a" and "b" both present)
Representation rep_from_json(const Json& j);

Json yd_to_json(const YDModule& M);
YDModule yd_from_json(const Json& j);

Json catalog_to_json(const std::vector<CatalogEntry>& cat);
Json yd_catalog_to_json(const std::vector<YDCatalogEntry>& cat);

Json certificate_to_json(const IndecompCertificate& c);

// two-space indent plus trailing newline; equal inputs give equal bytes
std::string dump_stable(const Json& j);

}  // namespace qdd
