#include "hcara/cara_numbers.hpp"

#include "hcara/errors.hpp"
#include "hcara/linalg.hpp"
#include "hcara/linear_program.hpp"

#include <algorithm>
#include <functional>

namespace hcara {
namespace {

std::size_t common_dim(std::span<const RVector> vectors) {
    const std::size_t dim = vectors.front().dim();
    for (const auto& v : vectors) {
        if (v.dim() != dim) throw InputError("vectors of different dimensions");
    }
    return dim;
}

// Rows sum_i lambda_i v_i = target, coordinate by coordinate.
void add_combination_rows(LinearProgram& lp, std::span<const RVector> vectors, const RVector& target) {
    for (std::size_t c = 0; c < target.dim(); ++c) {
        RVector row(vectors.size());
        for (std::size_t i = 0; i < vectors.size(); ++i) row[i] = vectors[i][c];
        lp.add(std::move(row), Relation::Equal, target[c]);
    }
}

// Nonnegative, nonzero lambda with sum lambda_i v_i = 0.
bool semi_positively_dependent(std::span<const RVector> vectors) {
    if (vectors.empty()) return false;
    const std::size_t k = vectors.size();
    LinearProgram lp(k);
    add_combination_rows(lp, vectors, RVector::zero(common_dim(vectors)));
    RVector ones(k);
    for (std::size_t i = 0; i < k; ++i) {
        ones[i] = 1;
        lp.add(RVector::unit(k, i), Relation::GreaterEqual, 0);
    }
    lp.add(std::move(ones), Relation::Equal, 1);
    return solve(lp).feasible();
}

std::vector<RVector> without(std::span<const RVector> vectors, std::size_t skip) {
    std::vector<RVector> rest;
    rest.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (i != skip) rest.push_back(vectors[i]);
    }
    return rest;
}

// Depth-first walk over conical-position subsets in lexicographic preorder.
// Conical position is hereditary, so non-conical sets are never extended.
void walk_conical(const NormalSet& normals, IndexSet& current, std::size_t next,
                  const std::function<void(const IndexSet&)>& visit) {
    for (std::size_t i = next; i < normals.size(); ++i) {
        current.push_back(i);
        if (is_conical_position(normals.select(current))) {
            visit(current);
            walk_conical(normals, current, i + 1, visit);
        }
        current.pop_back();
    }
}

}  // namespace

bool positive_hull_contains(std::span<const RVector> generators, const RVector& a) {
    if (generators.empty()) return a.is_zero();
    if (common_dim(generators) != a.dim()) throw InputError("positive hull query of wrong dimension");
    const std::size_t k = generators.size();
    LinearProgram lp(k);
    add_combination_rows(lp, generators, a);
    for (std::size_t i = 0; i < k; ++i) lp.add(RVector::unit(k, i), Relation::GreaterEqual, 0);
    return solve(lp).feasible();
}

bool positively_dependent(std::span<const RVector> vectors) {
    if (vectors.empty()) return false;
    const std::size_t k = vectors.size();
    LinearProgram lp(k);
    add_combination_rows(lp, vectors, RVector::zero(common_dim(vectors)));
    for (std::size_t i = 0; i < k; ++i) lp.add(RVector::unit(k, i), Relation::GreaterEqual, 1);
    return solve(lp).feasible();
}

bool strictly_separable(std::span<const RVector> vectors) {
    if (vectors.empty()) return true;
    const std::size_t dim = common_dim(vectors);
    LinearProgram lp(dim);
    for (const auto& v : vectors) lp.add(v, Relation::GreaterEqual, 1);
    return solve(lp).feasible();
}

bool is_simplex_with_origin(std::span<const RVector> vectors) {
    if (vectors.empty()) throw InputError("simplex test on an empty set");
    common_dim(vectors);
    if (!positively_dependent(vectors)) return false;
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (semi_positively_dependent(without(vectors, j))) return false;
    }
    if (!affinely_independent(vectors)) {
        throw InternalError("minimal positive circuit is not affinely independent");
    }
    return true;
}

bool is_conical_position(std::span<const RVector> vectors) {
    if (vectors.empty()) throw InputError("conical position test on an empty set");
    common_dim(vectors);
    for (const auto& v : vectors) {
        if (v.is_zero()) throw InputError("conical position test on a set containing the zero vector");
    }
    if (!strictly_separable(vectors)) return false;
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (positive_hull_contains(without(vectors, j), vectors[j])) return false;
    }
    return true;
}

bool positive_hull_free_of_rest(const NormalSet& normals, const IndexSet& chosen) {
    const auto generators = normals.select(chosen);
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
        if (positive_hull_contains(generators, normals[i])) return false;
    }
    return true;
}

SizedWitness helly_number(const NormalSet& normals) {
    const std::size_t cap = std::min(normals.dim() + 1, normals.size());
    for (std::size_t k = cap; k >= 2; --k) {
        SizedWitness found;
        const bool hit = for_each_subset_of_size(normals.size(), k, [&](const IndexSet& idx) {
            const auto subset = normals.select(idx);
            // A minimal circuit of k vectors spans a (k-1)-dimensional space.
            if (rank(subset) != k - 1) return false;
            if (!is_simplex_with_origin(subset)) return false;
            found = {k, idx};
            return true;
        });
        if (hit) return found;
    }
    return {};
}

SizedWitness cone_number(const NormalSet& normals) {
    SizedWitness best;
    IndexSet current;
    walk_conical(normals, current, 0, [&](const IndexSet& idx) {
        if (idx.size() <= best.size) return;
        if (positive_hull_free_of_rest(normals, idx)) best = {idx.size(), idx};
    });
    return best;
}

SizedWitness relaxed_cone_number(const NormalSet& normals) {
    SizedWitness best;
    IndexSet current;
    walk_conical(normals, current, 0, [&](const IndexSet& idx) {
        if (idx.size() > best.size) best = {idx.size(), idx};
    });
    return best;
}

void InvariantReport::verify(const NormalSet& normals) const {
    if (caratheodory != std::max(helly, cone)) throw InternalError("caratheodory != max(helly, cone)");
    if (helly_witness.size() != helly || cone_witness.size() != cone ||
        relaxed_cone_witness.size() != relaxed_cone) {
        throw InternalError("witness size does not match its invariant");
    }
    if (relaxed_cone < cone) throw InternalError("relaxed cone number below cone number");
    if (helly > 0 && !is_simplex_with_origin(normals.select(helly_witness))) {
        throw InternalError("Helly witness is not a minimal positive circuit");
    }
    if (cone > 0 && (!is_conical_position(normals.select(cone_witness)) ||
                     !positive_hull_free_of_rest(normals, cone_witness))) {
        throw InternalError("cone witness fails its defining predicate");
    }
    if (one_sided != (helly == 0)) throw InternalError("one-sidedness disagrees with the Helly number");
}

InvariantReport caratheodory_number(const NormalSet& normals) {
    if (normals.empty()) throw InputError("Carathéodory number of an empty normal set");
    InvariantReport report;
    auto helly = helly_number(normals);
    auto cone = cone_number(normals);
    auto relaxed = relaxed_cone_number(normals);
    report.helly = helly.size;
    report.helly_witness = std::move(helly.witness);
    report.cone = cone.size;
    report.cone_witness = std::move(cone.witness);
    report.relaxed_cone = relaxed.size;
    report.relaxed_cone_witness = std::move(relaxed.witness);
    report.caratheodory = std::max(report.helly, report.cone);
    report.one_sided = strictly_separable(normals.normals());
    report.verify(normals);
    return report;
}

}  // namespace hcara
