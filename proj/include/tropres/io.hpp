#pragma once

#include "tropres/configurations.hpp"
#include "tropres/polyhedral.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tropres {

using Json = nlohmann::json;

// Integers are JSON numbers when they fit in a long, decimal strings otherwise.
Json to_json(const Integer& x);
Json to_json(const Rational& x);  // "p/q" or "p"
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const std::vector<IntVector>& rows);
Json to_json(const IntMatrix& m);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);
std::vector<IntVector> int_rows_from_json(const Json& j);

// {"configurations": [[[x,...],...],...], "specialized": [[1-based labels],...]}
struct TupleInput {
    ConfigTuple tuple;
    std::optional<SpecializationPattern> pattern;
};
TupleInput tuple_from_json(const Json& j);
Json to_json(const ConfigTuple& t, const SpecializationPattern* s = nullptr);

// Whitespace-separated integers, one point per row, one configuration per
// blank-line-separated block; '#' starts a comment.
ConfigTuple tuple_from_text(const std::string& text);

// {"rays": [...], "lineality": [...]} or {"equations": [...], "inequalities": [...]}
Json to_json(const Cone& c);
Cone cone_from_json(std::size_t n, const Json& j);

// {"ambient_dim": n, "pieces": [{cone fields..., "multiplicity": m}, ...]}
Json to_json(const WeightedConeSet& s);
WeightedConeSet cone_set_from_json(const Json& j);

// {"ambient_dim", "lineality", "rays", "cones" (ray indices), "multiplicities", "f_vector"}
Json to_json(const Fan& f);
Fan fan_from_json(const Json& j);

}  // namespace tropres
