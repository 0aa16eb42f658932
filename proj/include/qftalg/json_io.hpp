#pragma once

// JSON documents. Keys keep insertion order so output bytes are stable.

#include <vector>

#include <json.hpp>

#include "qftalg/hopf.hpp"
#include "qftalg/laws.hpp"
#include "qftalg/renorm.hpp"
#include "qftalg/scalar.hpp"

namespace qftalg {

using Json = nlohmann::ordered_json;

// [{"coeff": "p/q", "symbols": [{"kind": "D"|"Dplus", "a", "b", "pow"}]}]
Json to_json(const PropPoly& p);
// [{"point", "power", "mult"}]
Json to_json(const Monomial& m);
// [{"monomial": ..., "coeff": ...}]
Json to_json(const Element& u);
// [{"slots": [...], "coeff": ...}]
Json to_json(const Tensor& t);
// {"law", "checked", "failures": [{"law", "inputs", "lhs", "rhs"}]}
Json to_json(const LawReport& r);

// The readers throw std::invalid_argument on malformed documents.
PropPoly poly_from_json(const Json& j);
Monomial monomial_from_json(const Json& j);
Element element_from_json(const Json& j);
/// [{"from": Monomial, "to": [{"point", "power", "coeff"}]}]
Vertex vertex_from_json(const Json& j);

}  // namespace qftalg
