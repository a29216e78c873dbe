#pragma once

#include "hcara/rvector.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hcara {

using IndexSet = std::vector<std::size_t>;

/// A finite set H of nonzero outer normals. Positive multiples collapse to
/// their first occurrence, so indices refer to the collapsed list.
/// Normals are not normalized to unit length; every predicate built on them
/// is invariant under positive scaling.
class NormalSet {
public:
    NormalSet() = default;
    NormalSet(std::size_t dim, std::vector<RVector> normals);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return normals_.size(); }
    bool empty() const { return normals_.empty(); }
    const RVector& operator[](std::size_t i) const { return normals_[i]; }
    const std::vector<RVector>& normals() const { return normals_; }

    std::vector<RVector> select(const IndexSet& indices) const;

private:
    std::size_t dim_ = 0;
    std::vector<RVector> normals_;
};

/// A finite set X of pairwise distinct points.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::size_t dim, std::vector<RVector> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const RVector& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<RVector>& points() const { return points_; }

    PointSet subset(const IndexSet& indices) const;
    PointSet without(std::size_t index) const;
    PointSet scaled(const Rational& factor) const;
    PointSet translated(const RVector& offset) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<RVector> points_;
};

/// f(j): for point j, the index of a normal that point j sees (<a, x_j> >= 0)
/// and every other point misses (<a, x_j'> < 0).
struct ExclusionAssignment {
    std::vector<std::size_t> normal_of_point;

    /// Throws InternalError unless every entry meets the exclusivity condition.
    void verify(const NormalSet& normals, const PointSet& points) const;
};

/// max over x in X of <a, x>. Throws InputError for empty X.
Rational support(const PointSet& points, const RVector& direction);

/// p lies in conv_H X iff <a, p> <= support(X, a) for every a in H.
/// The hull of the empty set is empty.
bool h_hull_contains(const NormalSet& normals, const PointSet& points, const RVector& p);

/// Every normal is seen by some point: for all i exists j, <a_i, x_j> >= 0.
/// Equivalent to 0 in conv_H X.
bool covering_holds(const NormalSet& normals, const PointSet& points);

/// Each point owns a normal no other point sees. Returns the least-index
/// assignment, or std::nullopt if some point owns none.
std::optional<ExclusionAssignment> excluding_holds(const NormalSet& normals, const PointSet& points);

/// Smallest subset X' of X with p in conv_H X', searched by (size,
/// lexicographic index order). Throws PreconditionError when p is not in
/// conv_H X. Returns the chosen indices into X.
IndexSet minimal_h_witness_indices(const NormalSet& normals, const PointSet& points, const RVector& p);
PointSet minimal_h_witness(const NormalSet& normals, const PointSet& points, const RVector& p);

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic
/// order until visit returns true. Returns whether any call returned true.
template <typename Visit>
bool for_each_subset_of_size(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return false;
    IndexSet idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (visit(static_cast<const IndexSet&>(idx))) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace hcara
