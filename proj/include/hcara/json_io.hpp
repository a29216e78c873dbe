#pragma once

#include "hcara/cara_numbers.hpp"
#include "hcara/strong_convexity.hpp"
#include "hcara/witness.hpp"

#include <json.hpp>

#include <filesystem>

namespace hcara::json_io {

using Json = nlohmann::json;

// Rationals are strings "p/q" (or "p"); bare JSON integers are accepted on
// input. Floats are rejected. All parse failures throw InputError.

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const RVector& v);
RVector vector_from_json(const Json& j);

/// {"dim": n, "normals": [[...], ...]}
Json to_json(const NormalSet& normals);
NormalSet normal_set_from_json(const Json& j);

/// {"dim": n, "points": [[...], ...]}
Json to_json(const PointSet& points);
PointSet point_set_from_json(const Json& j);

/// {"dim": n, "normals": [[...], ...], "offsets": [...]}
Json to_json(const Polytope& body);
Polytope polytope_from_json(const Json& j);

/// {"helly", "cone", "caratheodory", "relaxed_cone", "helly_witness",
///  "cone_witness", "one_sided"}
Json to_json(const InvariantReport& report);
InvariantReport invariant_report_from_json(const Json& j);

/// {"kind", "normals_used", "points", "covering_ok", "drop_one_ok",
///  "assignment": [f(0), f(1), ...] or null}
Json to_json(const WitnessReport& report);
WitnessReport witness_report_from_json(const Json& j);

/// Reads and parses a JSON document; missing files and syntax errors throw
/// InputError.
Json load_file(const std::filesystem::path& path);

}  // namespace hcara::json_io
