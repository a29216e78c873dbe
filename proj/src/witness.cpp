#include "hcara/witness.hpp"

#include "hcara/cara_numbers.hpp"
#include "hcara/errors.hpp"
#include "hcara/linalg.hpp"
#include "hcara/linear_program.hpp"

#include <algorithm>

namespace hcara {
namespace {

bool drop_one_breaks_covering(const NormalSet& normals, const PointSet& points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (covering_holds(normals, points.without(i))) return false;
    }
    return true;
}

void check_indices(const NormalSet& normals, const IndexSet& chosen) {
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (chosen[k] >= normals.size()) throw InputError("normal index " + std::to_string(chosen[k]) + " out of range");
        for (std::size_t j = 0; j < k; ++j) {
            if (chosen[j] == chosen[k]) throw InputError("repeated normal index " + std::to_string(chosen[k]));
        }
    }
}

}  // namespace

std::string to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::Helly: return "HELLY";
        case WitnessKind::Cone: return "CONE";
        case WitnessKind::Unspecified: return "UNSPECIFIED";
    }
    return "UNSPECIFIED";
}

WitnessKind parse_witness_kind(std::string_view text) {
    if (text == "HELLY" || text == "helly") return WitnessKind::Helly;
    if (text == "CONE" || text == "cone") return WitnessKind::Cone;
    if (text == "UNSPECIFIED" || text == "unspecified") return WitnessKind::Unspecified;
    throw InputError("unknown witness kind '" + std::string(text) + "'");
}

WitnessReport validate_witness(const NormalSet& normals, const PointSet& points, WitnessKind kind) {
    WitnessReport report;
    report.kind = kind;
    report.points = points;
    report.covering_ok = covering_holds(normals, points);
    report.drop_one_ok = drop_one_breaks_covering(normals, points);
    report.assignment = excluding_holds(normals, points);
    if (report.assignment) {
        report.normals_used = report.assignment->normal_of_point;
    }
    return report;
}

WitnessReport helly_witness_points(const NormalSet& normals, const IndexSet& circuit) {
    check_indices(normals, circuit);
    const std::size_t k = circuit.size();
    const auto base = normals.select(circuit);
    if (k < 2 || !is_simplex_with_origin(base)) {
        throw InputError("Helly witness set must be a minimal positive circuit of at least two normals");
    }

    // The positive dependence of a minimal circuit is unique up to scale.
    LinearProgram lp(k);
    for (std::size_t c = 0; c < normals.dim(); ++c) {
        RVector row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = base[i][c];
        lp.add(std::move(row), Relation::Equal, 0);
    }
    for (std::size_t i = 0; i < k; ++i) lp.add(RVector::unit(k, i), Relation::GreaterEqual, 1);
    const auto dependence = solve(lp);
    if (!dependence.feasible()) throw InternalError("circuit lost its positive dependence");

    std::vector<RVector> scaled;
    for (std::size_t i = 0; i < k; ++i) scaled.push_back((*dependence.witness)[i] * base[i]);

    std::vector<RVector> xs;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<RVector> rows;
        for (std::size_t j = 0; j < k; ++j) {
            if (j != i) rows.push_back(scaled[j]);
        }
        const std::vector<Rational> rhs(rows.size(), Rational(-1));
        auto x = solve_linear(rows, rhs);
        if (!x) throw InternalError("Helly witness system is inconsistent");
        xs.push_back(std::move(*x));
    }

    RVector total = RVector::zero(normals.dim());
    for (std::size_t i = 0; i < k; ++i) {
        if (dot(scaled[i], xs[i]) != Rational(static_cast<long>(k) - 1)) {
            throw InternalError("Helly witness violates <a_i, x_i> = k - 1");
        }
        total += xs[i];
    }
    if (!total.is_zero()) throw InternalError("Helly witness points do not sum to zero");

    WitnessReport report = validate_witness(normals, PointSet(normals.dim(), std::move(xs)), WitnessKind::Helly);
    report.normals_used = circuit;
    if (!report.valid()) throw InternalError("Helly witness failed covering or drop-one minimality");
    return report;
}

WitnessReport cone_witness_points(const NormalSet& normals, const IndexSet& cone) {
    check_indices(normals, cone);
    if (cone.empty()) throw PreconditionError("cone witness set is empty");
    const auto base = normals.select(cone);
    if (!is_conical_position(base)) throw PreconditionError("cone witness set is not in conical position");
    if (!positive_hull_free_of_rest(normals, cone)) {
        throw PreconditionError("positive hull of the cone witness set contains another normal");
    }

    const std::size_t dim = normals.dim();
    std::vector<RVector> xs;
    for (std::size_t i = 0; i < base.size(); ++i) {
        LinearProgram lp(dim);
        for (std::size_t j = 0; j < base.size(); ++j) {
            if (j == i) {
                lp.add(base[j], Relation::Equal, 0);
            } else {
                lp.add(base[j], Relation::LessEqual, -1);
            }
        }
        auto outcome = solve(lp);
        if (!outcome.feasible()) throw PreconditionError("no point separates normal " + std::to_string(cone[i]));
        xs.push_back(std::move(*outcome.witness));
    }

    WitnessReport report = validate_witness(normals, PointSet(dim, std::move(xs)), WitnessKind::Cone);
    report.normals_used = cone;
    if (!report.covering_ok) throw NotMaximalError("halfspaces of the cone witness points do not cover H");
    if (!report.drop_one_ok) throw InternalError("cone witness points are not drop-one minimal");
    return report;
}

}  // namespace hcara
