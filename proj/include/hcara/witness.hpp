#pragma once

#include "hcara/hconvexity.hpp"

#include <optional>
#include <string>

namespace hcara {

enum class WitnessKind { Helly, Cone, Unspecified };

std::string to_string(WitnessKind kind);
WitnessKind parse_witness_kind(std::string_view text);

/// Certificate that 0 lies in conv_H X while no proper subset of X has it,
/// i.e. that the Carathéodory number of H is at least |X|.
struct WitnessReport {
    WitnessKind kind = WitnessKind::Unspecified;
    IndexSet normals_used;  ///< the generating subset B of H
    PointSet points;
    bool covering_ok = false;
    bool drop_one_ok = false;
    std::optional<ExclusionAssignment> assignment;

    bool valid() const { return covering_ok && drop_one_ok; }
};

/// Extremal set from a minimal positive circuit B: after scaling B so its
/// vectors sum to 0, x_i is the minimum-norm solution of <a_j, x_i> = -1 for
/// j != i. Throws InputError if B is not a circuit of size >= 2.
WitnessReport helly_witness_points(const NormalSet& normals, const IndexSet& circuit);

/// Extremal set from a maximal cone witness B: x_i solves <a_i, x_i> = 0 and
/// <a_j, x_i> <= -1 for j != i. Throws PreconditionError if B is not in
/// conical position with an empty positive hull, NotMaximalError if the
/// resulting halfspaces fail to cover H.
WitnessReport cone_witness_points(const NormalSet& normals, const IndexSet& cone);

/// Evaluates covering, drop-one minimality and the exclusion assignment.
WitnessReport validate_witness(const NormalSet& normals, const PointSet& points,
                               WitnessKind kind = WitnessKind::Unspecified);

}  // namespace hcara
