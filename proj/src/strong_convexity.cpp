#include "hcara/strong_convexity.hpp"

#include "hcara/cara_numbers.hpp"
#include "hcara/errors.hpp"
#include "hcara/linear_program.hpp"

namespace hcara {
namespace {

// Rows <a_i, t> >= support(X, a_i) - b_i describe { t : X inside K + t }.
LinearProgram translate_region(const Polytope& body, const PointSet& points) {
    LinearProgram lp(body.dim());
    for (std::size_t i = 0; i < body.num_facets(); ++i) {
        lp.add(body.normal(i), Relation::GreaterEqual, support(points, body.normal(i)) - body.offset(i));
    }
    return lp;
}

void check_query(const Polytope& body, const PointSet& points, const RVector& p) {
    if (points.dim() != body.dim() || p.dim() != body.dim()) {
        throw InputError("polytope, point set and query point must share a dimension");
    }
}

}  // namespace

Polytope::Polytope(std::size_t dim, std::vector<RVector> normals, std::vector<Rational> offsets) : dim_(dim) {
    if (dim == 0) throw InputError("polytope dimension must be positive");
    if (normals.size() != offsets.size()) throw InputError("polytope has different numbers of normals and offsets");

    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (normals[i].dim() != dim) throw InputError("polytope normal of wrong dimension");
        if (normals[i].is_zero()) throw InputError("polytope row with zero normal");
        bool merged = false;
        for (std::size_t k = 0; k < normals_.size() && !merged; ++k) {
            if (!is_positive_multiple(normals[i], normals_[k])) continue;
            // normals[i] = c * normals_[k], so the row reads <normals_[k], x> <= b / c.
            std::size_t j = 0;
            while (normals_[k][j] == 0) ++j;
            const Rational c = normals[i][j] / normals_[k][j];
            const Rational b = offsets[i] / c;
            if (b < offsets_[k]) offsets_[k] = b;
            merged = true;
        }
        if (!merged) {
            normals_.push_back(std::move(normals[i]));
            offsets_.push_back(std::move(offsets[i]));
        }
    }

    // Interior: maximize s subject to <a_i, x> + s <= b_i, s <= 1.
    {
        LinearProgram lp(dim + 1);
        for (std::size_t i = 0; i < normals_.size(); ++i) {
            std::vector<Rational> row(normals_[i].coords());
            row.push_back(1);
            lp.add(RVector(std::move(row)), Relation::LessEqual, offsets_[i]);
        }
        lp.add(RVector::unit(dim + 1, dim), Relation::LessEqual, 1);
        lp.maximize(RVector::unit(dim + 1, dim));
        const auto outcome = solve(lp);
        if (outcome.status != LpStatus::Optimal || *outcome.value <= 0) {
            throw InputError("polytope has empty interior");
        }
    }

    // Drop rows that do not support a facet.
    for (std::size_t i = 0; i < normals_.size();) {
        LinearProgram lp(dim);
        for (std::size_t j = 0; j < normals_.size(); ++j) {
            if (j != i) lp.add(normals_[j], Relation::LessEqual, offsets_[j]);
        }
        lp.maximize(normals_[i]);
        const auto outcome = solve(lp);
        if (outcome.status == LpStatus::Optimal && *outcome.value <= offsets_[i]) {
            normals_.erase(normals_.begin() + static_cast<std::ptrdiff_t>(i));
            offsets_.erase(offsets_.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }

    for (std::size_t axis = 0; axis < dim; ++axis) {
        const RVector e = RVector::unit(dim, axis);
        if (!positive_hull_contains(normals_, e) || !positive_hull_contains(normals_, -e)) {
            throw InputError("polytope is unbounded: its normals do not positively span the space");
        }
    }
}

bool Polytope::contains(const RVector& x) const {
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        if (dot(normals_[i], x) > offsets_[i]) return false;
    }
    return true;
}

std::optional<RVector> fits_in_translate(const Polytope& body, const PointSet& points) {
    if (points.dim() != body.dim()) throw InputError("point set and polytope dimensions differ");
    if (points.empty()) return RVector::zero(body.dim());
    auto outcome = solve(translate_region(body, points));
    if (!outcome.feasible()) return std::nullopt;
    return std::move(outcome.witness);
}

bool strong_hull_contains(const Polytope& body, const PointSet& points, const RVector& p) {
    check_query(body, points, p);
    if (points.empty()) return false;
    LinearProgram region = translate_region(body, points);
    if (!solve(region).feasible()) {
        throw PreconditionError("X fits in no translate of K, so its strongly convex hull is undefined");
    }
    for (std::size_t i = 0; i < body.num_facets(); ++i) {
        region.maximize(-body.normal(i));
        const auto outcome = solve(region);
        if (outcome.status != LpStatus::Optimal) throw InternalError("translate region of a bounded body is unbounded");
        // max over translates of <a_i, p - t> - b_i.
        const Rational violation = dot(body.normal(i), p) + *outcome.value - body.offset(i);
        if (violation > 0) return false;
    }
    return true;
}

bool is_minimal_strong_witness(const Polytope& body, const PointSet& points, const RVector& p) {
    if (!strong_hull_contains(body, points, p)) return false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (strong_hull_contains(body, points.without(i), p)) return false;
    }
    return true;
}

IndexSet minimal_strong_witness_indices(const Polytope& body, const PointSet& points, const RVector& p) {
    if (!strong_hull_contains(body, points, p)) {
        throw PreconditionError("point " + to_string(p) + " is not in the strongly convex hull of X");
    }
    IndexSet found;
    for (std::size_t k = 1; k <= points.size(); ++k) {
        const bool hit = for_each_subset_of_size(points.size(), k, [&](const IndexSet& idx) {
            if (!strong_hull_contains(body, points.subset(idx), p)) return false;
            found = idx;
            return true;
        });
        if (hit) return found;
    }
    throw InternalError("no subset of X reproduces a strong hull that X itself satisfies");
}

PointSet minimal_strong_witness(const Polytope& body, const PointSet& points, const RVector& p) {
    return points.subset(minimal_strong_witness_indices(body, points, p));
}

std::optional<std::vector<std::size_t>> guard_assignment(const Polytope& body, const PointSet& points,
                                                         const RVector& p) {
    check_query(body, points, p);
    std::vector<std::size_t> guards;
    for (std::size_t j = 0; j < points.size(); ++j) {
        std::optional<std::size_t> guard;
        for (std::size_t i = 0; i < body.num_facets() && !guard; ++i) {
            const RVector& a = body.normal(i);
            const Rational level = dot(a, points[j]);
            if (level < dot(a, p)) continue;
            bool strict = true;
            for (std::size_t k = 0; k < points.size(); ++k) {
                if (k != j && dot(a, points[k]) >= level) {
                    strict = false;
                    break;
                }
            }
            if (strict) guard = i;
        }
        if (!guard) return std::nullopt;
        guards.push_back(*guard);
    }
    return guards;
}

bool h_subset_strong_check(const Polytope& body, const PointSet& points, const RVector& p) {
    check_query(body, points, p);
    if (!h_hull_contains(body.normal_set(), points, p)) return true;
    return strong_hull_contains(body, points, p);
}

}  // namespace hcara
