#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qhtoric/batyrev.hpp"
#include "qhtoric/blowup.hpp"
#include "qhtoric/polytope.hpp"
#include "qhtoric/ssalg.hpp"

namespace qhtoric {

// Insertion-ordered so that reports are byte-stable and read in pipeline
// order instead of alphabetically.
using Json = nlohmann::ordered_json;

// Exact values are serialized as strings ("p/q", big integers, polynomial
// text); symbolic exponents as {"const": "...", "<param>": "..."} objects.
Json json_of(const Rational& r);
Json json_of(const Integer& n);
Json json_of(const SymExp& e);
Json json_of(const ParamSystemPtr& sys);
Json json_of(const MPoly& p);
Json json_of(const FieldElem& c);
Json json_of(const UniPoly& p);
Json json_of(const MomentPolytope& p);
Json json_of(const DelzantReport& r);
Json json_of(const FanoReport& r);
Json json_of(const Classification& c);
Json json_of(const QuantumRelation& r);
Json json_of(const QHPresentation& p);
Json json_of(const ReducedPresentation& r);
Json json_of(const FDAlgebra& a);
Json json_of(const Certificate& c);
Json json_of(const BlowupAlgebra& a);

// Parsers throw ValidationError on malformed input.  Polynomial-valued
// fields are re-parsed against the system deserialized alongside them.
Rational rational_from(const Json& j);
Integer integer_from(const Json& j);
SymExp symexp_from(const Json& j);
ParamSystemPtr system_from(const Json& j);
MPoly mpoly_from(const ParamSystemPtr& sys, const Json& j);
FieldElem fieldelem_from(const ParamSystemPtr& sys, const Json& j);
QHPresentation presentation_from(const Json& j);
FDAlgebra algebra_from(const Json& j);
std::vector<Vec2Q> vertices_from(const Json& j);

// Reads and parses a file; file and syntax problems surface as
// ValidationError with the byte position nlohmann reports.
Json load_json(const std::string& path);

// Plain-text rendering of a report tree: "key: value" lines, two-space
// indentation, "-" items for arrays.  Deterministic.
std::string render_text(const Json& j);

}  // namespace qhtoric
