#pragma once

#include "hcara/rvector.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hcara {

/// Rank of a family of vectors (fraction-free Bareiss elimination on the
/// integer-scaled rows). The empty family has rank 0.
std::size_t rank(std::span<const RVector> vectors);

/// Solves A x = b exactly. Returns std::nullopt when inconsistent. When the
/// system is underdetermined the minimum-norm solution (the unique solution
/// inside the row space of A) is returned. Throws InputError on mismatched
/// dimensions.
std::optional<RVector> solve_linear(std::span<const RVector> rows, std::span<const Rational> rhs);

/// True iff the points are affinely independent.
bool affinely_independent(std::span<const RVector> points);

}  // namespace hcara
