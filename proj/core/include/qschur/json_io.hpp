#pragma once

#include <json.hpp>

#include "qschur/operator_expr.hpp"
#include "qschur/tensor.hpp"

namespace qschur {

using json = nlohmann::json;

// Wire formats:
//   LaurentPoly       [[exponent, num, den], ...] sorted by exponent
//   CyclotomicNumber  {"lprime": k, "coords": [[num, den], ...]}
//   Scalar            {"generic": <laurent>} | {"specialized": <cyclotomic>}
//   TensorVector      {"r": n, "terms": [{"idx": [...], "coeff": <scalar>}, ...]}
//   OperatorExpr      nested objects tagged by "kind"
//   Session           {"n": int, "r": int, "lprime": int | null}

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const CyclotomicNumber& z);
CyclotomicNumber cyclotomic_from_json(const json& j);

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json to_json(const Composition& c);
Composition composition_from_json(const json& j);

json to_json(const TensorVector& v);
TensorVector tensor_from_json(const json& j);

json to_json(const OperatorExpr& op);
OperatorExpr operator_from_json(const json& j);

json to_json(const Session& ses);
Session session_from_json(const json& j);

}  // namespace qschur
