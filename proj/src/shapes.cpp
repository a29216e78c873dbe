#include "hcara/shapes.hpp"

#include "hcara/errors.hpp"

#include <array>
#include <utility>

namespace hcara::shapes {

Polytope cube(std::size_t n) {
    std::vector<RVector> normals;
    std::vector<Rational> offsets;
    for (std::size_t i = 0; i < n; ++i) {
        normals.push_back(RVector::unit(n, i));
        offsets.emplace_back(1);
        normals.push_back(-RVector::unit(n, i));
        offsets.emplace_back(0);
    }
    return Polytope(n, std::move(normals), std::move(offsets));
}

namespace {

std::pair<std::vector<RVector>, std::vector<Rational>> simplex_rows(std::size_t n) {
    std::vector<RVector> normals;
    std::vector<Rational> offsets;
    for (std::size_t i = 0; i < n; ++i) {
        normals.push_back(-RVector::unit(n, i));
        offsets.emplace_back(0);
    }
    RVector ones(n);
    for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
    normals.push_back(std::move(ones));
    offsets.emplace_back(1);
    return {std::move(normals), std::move(offsets)};
}

}  // namespace

Polytope simplex(std::size_t n) {
    auto [normals, offsets] = simplex_rows(n);
    return Polytope(n, std::move(normals), std::move(offsets));
}

Polytope simplex_plus_facet(std::size_t n) {
    auto [normals, offsets] = simplex_rows(n);
    normals.push_back(RVector::unit(n, 0));
    offsets.emplace_back(1, 2);
    return Polytope(n, std::move(normals), std::move(offsets));
}

Polytope pyramid(std::size_t m) {
    using Base = std::vector<std::array<long, 2>>;
    static const std::array<Base, 9> bases = {
        Base{},
        Base{},
        Base{},
        Base{{1, 0}, {0, 1}, {-1, -1}},
        Base{{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
        Base{{2, 0}, {1, 2}, {-2, 1}, {-2, -1}, {1, -2}},
        Base{{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}},
        Base{{10, 0}, {6, 8}, {-2, 10}, {-9, 4}, {-9, -4}, {-2, -10}, {6, -8}},
        Base{{10, 0}, {7, 7}, {0, 10}, {-7, 7}, {-10, 0}, {-7, -7}, {0, -10}, {7, -7}},
    };
    if (m < 3 || m >= bases.size()) throw InputError("pyramid base must have between 3 and 8 sides");
    std::vector<RVector> normals;
    std::vector<Rational> offsets;
    for (const auto& [u, v] : bases[m]) {
        normals.push_back(RVector::from_ints({u, v, 1}));
        offsets.emplace_back(1);
    }
    normals.push_back(RVector::from_ints({0, 0, -1}));
    offsets.emplace_back(0);
    return Polytope(3, std::move(normals), std::move(offsets));
}

}  // namespace hcara::shapes
