#ifndef CCONES_SERIALIZE_HPP
#define CCONES_SERIALIZE_HPP

#include <json.hpp>

#include <string>

#include "ccones/cone.hpp"
#include "ccones/exponential.hpp"
#include "ccones/formula.hpp"
#include "ccones/oracle.hpp"

namespace ccones {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Rationals travel as strings "p/q" (or "p"). Integers and decimal JSON
// numbers are accepted on input.
Json to_json(const Rational& q);
Json to_json(const VecQ& v);
Json to_json(const Generators& g);
Json to_json(const MatQ& m);
Rational rational_from_json(const Json& j);
VecQ vector_from_json(const Json& j);
Generators generators_from_json(const Json& j);
MatQ matrix_from_json(const Json& j);

// Fixed formatting for floating-point report values.
std::string format_double(double x);

Json to_json(const NormBracket& b);
Json to_json(const Bracket& b);
Json to_json(const Formula& f);
Json to_json(const GradedSeries& s);
Json to_json(const AnalyticMap& f);
// Label, dimension, backend and coordinate layout; generator lists when they
// are exact and explicit, grade sizes for exponentials.
Json describe_object(const ConeObject& o);

// {"atoms": {name: {"kind": "pcs" | "polyhedral" | "qcs", ...}}}
Environment environment_from_json(const Json& j);
Json read_json_file(const std::string& path);

}  // namespace ccones

#endif  // CCONES_SERIALIZE_HPP
