#pragma once

#include "hcara/rvector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcara {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// One linear constraint: coeffs . x (rel) rhs.
struct LpRow {
    RVector coeffs;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

/// Linear program over free (unbounded-sign) variables. Sign constraints are
/// expressed as ordinary rows. Strict inequalities are not representable;
/// callers normalize them (lambda > 0 becomes lambda >= 1 for homogeneous
/// systems) or maximize a slack instead.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<LpRow> rows;
    std::optional<RVector> objective;  ///< maximized when present

    explicit LinearProgram(std::size_t vars = 0) : num_vars(vars) {}

    LinearProgram& add(RVector coeffs, Relation relation, Rational rhs) {
        rows.push_back({std::move(coeffs), relation, std::move(rhs)});
        return *this;
    }
    LinearProgram& maximize(RVector objective_coeffs) {
        objective = std::move(objective_coeffs);
        return *this;
    }
};

enum class LpStatus { Infeasible, Optimal, Unbounded, Feasible };

std::string to_string(LpStatus status);

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::optional<RVector> witness;
    std::optional<Rational> value;

    bool feasible() const { return status == LpStatus::Optimal || status == LpStatus::Feasible; }
};

/// Exact two-phase simplex with Bland's least-index rule. Without an
/// objective the result is Feasible or Infeasible. Every returned witness is
/// substituted back into all rows before returning; a failure there throws
/// InternalError. Malformed row lengths throw InputError.
LpOutcome solve(const LinearProgram& lp);

/// True iff the witness satisfies every row of the program exactly.
bool satisfies(const LinearProgram& lp, const RVector& point);

}  // namespace hcara
