#include "hcara/hconvexity.hpp"

#include "hcara/errors.hpp"

namespace hcara {
namespace {

void check_dim(std::size_t expected, const RVector& v, const char* what) {
    if (v.dim() != expected) {
        throw InputError(std::string(what) + " has dimension " + std::to_string(v.dim()) + ", expected " +
                         std::to_string(expected));
    }
}

void check_joint(const NormalSet& normals, const PointSet& points) {
    if (normals.dim() != points.dim()) {
        throw InputError("normal set dimension " + std::to_string(normals.dim()) +
                         " differs from point set dimension " + std::to_string(points.dim()));
    }
}

}  // namespace

NormalSet::NormalSet(std::size_t dim, std::vector<RVector> normals) : dim_(dim) {
    if (dim == 0) throw InputError("normal set dimension must be positive");
    for (auto& a : normals) {
        check_dim(dim, a, "normal");
        if (a.is_zero()) throw InputError("normal set contains the zero vector");
        bool duplicate = false;
        for (const auto& kept : normals_) {
            if (is_positive_multiple(a, kept)) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) normals_.push_back(std::move(a));
    }
}

std::vector<RVector> NormalSet::select(const IndexSet& indices) const {
    std::vector<RVector> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(normals_.at(i));
    return out;
}

PointSet::PointSet(std::size_t dim, std::vector<RVector> points) : dim_(dim) {
    if (dim == 0) throw InputError("point set dimension must be positive");
    for (std::size_t i = 0; i < points.size(); ++i) {
        check_dim(dim, points[i], "point");
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i] == points[j]) throw InputError("point set contains duplicate point " + to_string(points[i]));
        }
    }
    points_ = std::move(points);
}

PointSet PointSet::subset(const IndexSet& indices) const {
    std::vector<RVector> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(points_.at(i));
    return PointSet(dim_, std::move(out));
}

PointSet PointSet::without(std::size_t index) const {
    std::vector<RVector> out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i != index) out.push_back(points_[i]);
    }
    return PointSet(dim_, std::move(out));
}

PointSet PointSet::scaled(const Rational& factor) const {
    if (factor == 0 && points_.size() > 1) throw InputError("scaling by zero merges distinct points");
    std::vector<RVector> out;
    for (const auto& x : points_) out.push_back(factor * x);
    return PointSet(dim_, std::move(out));
}

PointSet PointSet::translated(const RVector& offset) const {
    std::vector<RVector> out;
    for (const auto& x : points_) out.push_back(x + offset);
    return PointSet(dim_, std::move(out));
}

void ExclusionAssignment::verify(const NormalSet& normals, const PointSet& points) const {
    if (normal_of_point.size() != points.size()) throw InternalError("exclusion assignment has wrong length");
    for (std::size_t j = 0; j < points.size(); ++j) {
        const RVector& a = normals[normal_of_point[j]];
        if (dot(a, points[j]) < 0) throw InternalError("assigned normal does not see its point");
        for (std::size_t k = 0; k < points.size(); ++k) {
            if (k != j && dot(a, points[k]) >= 0) throw InternalError("assigned normal is not exclusive");
        }
    }
}

Rational support(const PointSet& points, const RVector& direction) {
    if (points.empty()) throw InputError("support of an empty point set");
    check_dim(points.dim(), direction, "direction");
    Rational best = dot(direction, points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
        Rational v = dot(direction, points[i]);
        if (v > best) best = std::move(v);
    }
    return best;
}

bool h_hull_contains(const NormalSet& normals, const PointSet& points, const RVector& p) {
    check_joint(normals, points);
    check_dim(normals.dim(), p, "query point");
    if (points.empty()) return false;
    for (const auto& a : normals.normals()) {
        if (dot(a, p) > support(points, a)) return false;
    }
    return true;
}

bool covering_holds(const NormalSet& normals, const PointSet& points) {
    check_joint(normals, points);
    for (const auto& a : normals.normals()) {
        bool seen = false;
        for (const auto& x : points.points()) {
            if (dot(a, x) >= 0) {
                seen = true;
                break;
            }
        }
        if (!seen) return false;
    }
    return true;
}

std::optional<ExclusionAssignment> excluding_holds(const NormalSet& normals, const PointSet& points) {
    check_joint(normals, points);
    ExclusionAssignment result;
    for (std::size_t j = 0; j < points.size(); ++j) {
        std::optional<std::size_t> owner;
        for (std::size_t i = 0; i < normals.size() && !owner; ++i) {
            const RVector& a = normals[i];
            if (dot(a, points[j]) < 0) continue;
            bool exclusive = true;
            for (std::size_t k = 0; k < points.size(); ++k) {
                if (k != j && dot(a, points[k]) >= 0) {
                    exclusive = false;
                    break;
                }
            }
            if (exclusive) owner = i;
        }
        if (!owner) return std::nullopt;
        result.normal_of_point.push_back(*owner);
    }
    result.verify(normals, points);
    return result;
}

IndexSet minimal_h_witness_indices(const NormalSet& normals, const PointSet& points, const RVector& p) {
    if (!h_hull_contains(normals, points, p)) {
        throw PreconditionError("point " + to_string(p) + " is not in the H-convex hull of X");
    }
    IndexSet found;
    for (std::size_t k = 1; k <= points.size(); ++k) {
        const bool hit = for_each_subset_of_size(points.size(), k, [&](const IndexSet& idx) {
            if (!h_hull_contains(normals, points.subset(idx), p)) return false;
            found = idx;
            return true;
        });
        if (hit) return found;
    }
    throw InternalError("no subset of X reproduces a hull that X itself satisfies");
}

PointSet minimal_h_witness(const NormalSet& normals, const PointSet& points, const RVector& p) {
    return points.subset(minimal_h_witness_indices(normals, points, p));
}

}  // namespace hcara
