#pragma once

#include "hcara/strong_convexity.hpp"

namespace hcara::shapes {

/// [0,1]^n with facet rows e_i <= 1, -e_i <= 0, interleaved per axis.
Polytope cube(std::size_t n);

/// Standard simplex { x >= 0, sum x <= 1 }: normals -e_1..-e_n, then (1,...,1).
Polytope simplex(std::size_t n);

/// Standard simplex cut by the extra facet x_1 <= 1/2, whose normal is
/// opposite to the first simplex normal.
Polytope simplex_plus_facet(std::size_t n);

/// Pyramid in R^3 over a convex m-gon base (3 <= m <= 8): slanted facets
/// <(u_k, 1), x> <= 1 with integer base normals u_k, and the base z >= 0.
/// For m = 4 the normals are (1,0,1), (-1,0,1), (0,1,1), (0,-1,1), (0,0,-1).
Polytope pyramid(std::size_t m);

}  // namespace hcara::shapes
