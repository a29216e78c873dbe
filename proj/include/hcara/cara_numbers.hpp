#pragma once

#include "hcara/hconvexity.hpp"

#include <span>

namespace hcara {

/// a in pos(S) = { sum lambda_i s_i : lambda >= 0 }. pos of the empty set is {0}.
bool positive_hull_contains(std::span<const RVector> generators, const RVector& a);

/// Some lambda >= 1 gives sum lambda_i s_i = 0 (a strictly positive dependence).
bool positively_dependent(std::span<const RVector> vectors);

/// Exists n with <n, s> > 0 for every s (set-level strict separation from 0).
bool strictly_separable(std::span<const RVector> vectors);

/// S is a minimal positive circuit: the vertices of a simplex whose relative
/// interior contains the origin. When true, the affine independence of S is
/// asserted (InternalError otherwise).
bool is_simplex_with_origin(std::span<const RVector> vectors);

/// S lies in an open halfspace through 0 and no member is in the positive
/// hull of the others. Throws InputError if S contains the zero vector.
bool is_conical_position(std::span<const RVector> vectors);

/// No vector of H outside `chosen` lies in pos(chosen).
bool positive_hull_free_of_rest(const NormalSet& normals, const IndexSet& chosen);

struct SizedWitness {
    std::size_t size = 0;
    IndexSet witness;
};

/// Largest minimal positive circuit in H (at most dim + 1 vectors). Zero with
/// an empty witness when H is one-sided.
SizedWitness helly_number(const NormalSet& normals);

/// Largest conical-position subset whose positive hull holds no other normal.
SizedWitness cone_number(const NormalSet& normals);

/// Largest conical-position subset, emptiness condition dropped.
SizedWitness relaxed_cone_number(const NormalSet& normals);

struct InvariantReport {
    std::size_t helly = 0;
    std::size_t cone = 0;
    std::size_t caratheodory = 0;
    std::size_t relaxed_cone = 0;
    IndexSet helly_witness;
    IndexSet cone_witness;
    IndexSet relaxed_cone_witness;
    bool one_sided = false;

    /// Checks caratheodory = max(helly, cone), witness sizes, and that each
    /// witness passes its defining predicate. Throws InternalError.
    void verify(const NormalSet& normals) const;
};

/// Carathéodory number of H-convexity as max(Helly number, cone number),
/// with witnesses. Throws InputError for an empty H.
InvariantReport caratheodory_number(const NormalSet& normals);

}  // namespace hcara
