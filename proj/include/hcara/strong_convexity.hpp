#pragma once

#include "hcara/hconvexity.hpp"

#include <optional>

namespace hcara {

/// Bounded, full-dimensional polytope K = { x : <a_i, x> <= b_i }.
///
/// Construction canonicalizes the rows: positive multiples of one direction
/// merge into the tightest row (keeping the first normal), and rows that are
/// not facets are dropped. The surviving normals are exactly the facet
/// normal set H(K). Throws InputError when K is unbounded, has empty
/// interior, or has malformed rows.
class Polytope {
public:
    Polytope() = default;
    Polytope(std::size_t dim, std::vector<RVector> normals, std::vector<Rational> offsets);

    std::size_t dim() const { return dim_; }
    std::size_t num_facets() const { return normals_.size(); }
    const RVector& normal(std::size_t i) const { return normals_[i]; }
    const Rational& offset(std::size_t i) const { return offsets_[i]; }
    const std::vector<RVector>& normals() const { return normals_; }
    const std::vector<Rational>& offsets() const { return offsets_; }

    NormalSet normal_set() const { return NormalSet(dim_, normals_); }
    bool contains(const RVector& x) const;

private:
    std::size_t dim_ = 0;
    std::vector<RVector> normals_;
    std::vector<Rational> offsets_;
};

/// Some t with X inside K + t, or std::nullopt. The empty set fits at t = 0.
std::optional<RVector> fits_in_translate(const Polytope& body, const PointSet& points);

/// p lies in every translate of K that contains X. Decided per facet by
/// minimizing <a_i, t> over the translates containing X and comparing with
/// <a_i, p> - b_i. Throws PreconditionError if X fits no translate.
/// The hull of the empty set is empty.
bool strong_hull_contains(const Polytope& body, const PointSet& points, const RVector& p);

/// p is in conv_K X but in no conv_K (X minus one point). By monotonicity of
/// the hull this is the same as X being a minimum-size witness for p.
bool is_minimal_strong_witness(const Polytope& body, const PointSet& points, const RVector& p);

/// Smallest X' of X with p in conv_K X', by (size, lexicographic index).
/// Throws PreconditionError if p is not in conv_K X.
IndexSet minimal_strong_witness_indices(const Polytope& body, const PointSet& points, const RVector& p);
PointSet minimal_strong_witness(const Polytope& body, const PointSet& points, const RVector& p);

/// For each x in X, the least-index facet normal a with <a, x> >= <a, p> and
/// <a, x> > <a, y> for every other y in X. std::nullopt if some x has none.
std::optional<std::vector<std::size_t>> guard_assignment(const Polytope& body, const PointSet& points,
                                                         const RVector& p);

/// conv_H X is contained in conv_K X, probed at p: returns true unless p is in
/// the H-hull and outside the strong hull.
bool h_subset_strong_check(const Polytope& body, const PointSet& points, const RVector& p);

}  // namespace hcara
