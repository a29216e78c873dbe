#include "hcara/json_io.hpp"

#include "hcara/errors.hpp"

#include <fstream>
#include <sstream>

namespace hcara::json_io {
namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t size_from_json(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw InputError(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

std::size_t positive_dim(const Json& j) {
    const std::size_t dim = size_from_json(field(j, "dim"), "dim");
    if (dim == 0) throw InputError("dim must be positive");
    return dim;
}

std::vector<RVector> vectors_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<RVector> out;
    for (const auto& item : j) out.push_back(vector_from_json(item));
    return out;
}

IndexSet indices_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of indices");
    IndexSet out;
    for (const auto& item : j) out.push_back(size_from_json(item, what));
    return out;
}

bool bool_from_json(const Json& j, const char* what) {
    if (!j.is_boolean()) throw InputError(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

}  // namespace

Json to_json(const Rational& value) { return hcara::to_string(value); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) {
        throw InputError("floating-point number " + j.dump() + " rejected; write rationals as strings like \"1/2\"");
    }
    throw InputError("expected a rational string, got " + j.dump());
}

Json to_json(const RVector& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(to_json(c));
    return out;
}

RVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("vector must be a JSON array");
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(rational_from_json(c));
    return RVector(std::move(coords));
}

Json to_json(const NormalSet& normals) {
    Json list = Json::array();
    for (const auto& a : normals.normals()) list.push_back(to_json(a));
    return Json{{"dim", normals.dim()}, {"normals", std::move(list)}};
}

NormalSet normal_set_from_json(const Json& j) {
    return NormalSet(positive_dim(j), vectors_from_json(field(j, "normals"), "normals"));
}

Json to_json(const PointSet& points) {
    Json list = Json::array();
    for (const auto& x : points.points()) list.push_back(to_json(x));
    return Json{{"dim", points.dim()}, {"points", std::move(list)}};
}

PointSet point_set_from_json(const Json& j) {
    return PointSet(positive_dim(j), vectors_from_json(field(j, "points"), "points"));
}

Json to_json(const Polytope& body) {
    Json normals = Json::array();
    Json offsets = Json::array();
    for (std::size_t i = 0; i < body.num_facets(); ++i) {
        normals.push_back(to_json(body.normal(i)));
        offsets.push_back(to_json(body.offset(i)));
    }
    return Json{{"dim", body.dim()}, {"normals", std::move(normals)}, {"offsets", std::move(offsets)}};
}

Polytope polytope_from_json(const Json& j) {
    const Json& offsets_json = field(j, "offsets");
    if (!offsets_json.is_array()) throw InputError("offsets must be an array");
    std::vector<Rational> offsets;
    for (const auto& b : offsets_json) offsets.push_back(rational_from_json(b));
    return Polytope(positive_dim(j), vectors_from_json(field(j, "normals"), "normals"), std::move(offsets));
}

Json to_json(const InvariantReport& report) {
    return Json{{"helly", report.helly},
                {"cone", report.cone},
                {"caratheodory", report.caratheodory},
                {"relaxed_cone", report.relaxed_cone},
                {"helly_witness", report.helly_witness},
                {"cone_witness", report.cone_witness},
                {"one_sided", report.one_sided}};
}

InvariantReport invariant_report_from_json(const Json& j) {
    InvariantReport r;
    r.helly = size_from_json(field(j, "helly"), "helly");
    r.cone = size_from_json(field(j, "cone"), "cone");
    r.caratheodory = size_from_json(field(j, "caratheodory"), "caratheodory");
    r.relaxed_cone = size_from_json(field(j, "relaxed_cone"), "relaxed_cone");
    r.helly_witness = indices_from_json(field(j, "helly_witness"), "helly_witness");
    r.cone_witness = indices_from_json(field(j, "cone_witness"), "cone_witness");
    r.one_sided = bool_from_json(field(j, "one_sided"), "one_sided");
    return r;
}

Json to_json(const WitnessReport& report) {
    Json assignment = nullptr;
    if (report.assignment) assignment = report.assignment->normal_of_point;
    return Json{{"kind", to_string(report.kind)},
                {"normals_used", report.normals_used},
                {"points", to_json(report.points)},
                {"covering_ok", report.covering_ok},
                {"drop_one_ok", report.drop_one_ok},
                {"assignment", std::move(assignment)}};
}

WitnessReport witness_report_from_json(const Json& j) {
    WitnessReport r;
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw InputError("kind must be a string");
    r.kind = parse_witness_kind(kind.get<std::string>());
    r.normals_used = indices_from_json(field(j, "normals_used"), "normals_used");
    r.points = point_set_from_json(field(j, "points"));
    r.covering_ok = bool_from_json(field(j, "covering_ok"), "covering_ok");
    r.drop_one_ok = bool_from_json(field(j, "drop_one_ok"), "drop_one_ok");
    const Json& assignment = field(j, "assignment");
    if (!assignment.is_null()) r.assignment = ExclusionAssignment{indices_from_json(assignment, "assignment")};
    return r;
}

Json load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

}  // namespace hcara::json_io
