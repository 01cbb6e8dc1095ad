#pragma once

// JSON encoding of fields, exact matrices, forms and result structs.
// Field elements are written as strings ("3", "-1/2").

#include <string_view>

#include "json.hpp"
#include "kuechle/chow.hpp"
#include "kuechle/complete_quadrics.hpp"
#include "kuechle/pencils.hpp"
#include "kuechle/trivectors.hpp"

namespace kuechle::io {

using nlohmann::json;

/// Throws ParseError with the parser's diagnostic.
json parse_json(std::string_view text);
json read_json_file(const std::string& path);

/// {"field":"Q"} or {"field":"Fp","p":7}; a missing "field" key means Q.
Field field_from_json(const json& j);
json field_to_json(const Field& f);

FieldElem elem_from_json(const Field& f, const json& j);
json elem_to_json(const FieldElem& x);

/// {"rows":r,"cols":c,"entries":[[...]]} or a bare nested array.
Matrix matrix_from_json(const Field& f, const json& j);
json matrix_to_json(const Matrix& m);
json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& f, const json& j);

/// Rows of the json matrix span the subspace.
Subspace subspace_from_json(const Field& f, const json& j);
json subspace_to_json(const Subspace& u);

/// {"dim":8,"terms":[{"ijk":[2,3,8],"c":"1"}]} with 1-based indices.
TriVector trivector_from_json(const Field& f, const json& j);
json trivector_to_json(const TriVector& t);

/// Field keys plus "A" and "B".
SkewPencil pencil_from_json(const json& j);
json point_to_json(const ProjPoint1& p);
json binary_form_to_json(const BinaryForm& f);
json to_json(const SmoothnessReport& r);
json to_json(const StandardForm& s);
json to_json(const LagrangianEnumeration& e);
json to_json(const D3Counts& c);
json to_json(const B4LineCounts& c);

/// Field keys plus "C" and "Cp".
CQPoint cq_point_from_json(const json& j);
json to_json(const CQPoint& p);
json to_json(const SubalgebraG& g);
json to_json(const PhiValue& v);
json to_json(const YPointCount& c);
json to_json(const EmbeddingReport& r);

json to_json(const ChowClass& c);
json to_json(const SODLedger& l);

}  // namespace kuechle::io
