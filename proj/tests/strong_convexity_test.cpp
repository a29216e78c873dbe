#include "hcara/cara_numbers.hpp"
#include "hcara/errors.hpp"
#include "hcara/shapes.hpp"
#include "hcara/strong_convexity.hpp"
#include "hcara/witness.hpp"

#include "oracles/brute_force.hpp"
#include "oracles/corpus.hpp"

#include <gtest/gtest.h>

using namespace hcara;

namespace {

RVector V(std::initializer_list<long> v) { return RVector::from_ints(v); }

RVector R(std::initializer_list<Rational> v) { return RVector(v); }

Polytope triangle2() {
    return Polytope(2, {V({-1, 0}), V({0, -1}), V({1, 1})}, {Rational(0), Rational(0), Rational(2)});
}

// Random query near the hull of X.
RVector probe(corpus::Gen& gen, const PointSet& x) {
    RVector p = x[static_cast<std::size_t>(gen.between(0, static_cast<long>(x.size()) - 1))];
    for (std::size_t i = 0; i < p.dim(); ++i) p[i] += gen.rational(1, 8) / 2;
    return p;
}

}  // namespace

TEST(PolytopeType, Canonicalizes) {
    const Polytope k(2, {V({1, 0}), V({2, 0}), V({-1, 0}), V({0, 1}), V({0, -1}), V({1, 1})},
                     {Rational(1), Rational(4), Rational(0), Rational(1), Rational(0), Rational(5)});
    EXPECT_EQ(k.num_facets(), 4u);
    EXPECT_EQ(k.offset(0), Rational(1));
    EXPECT_TRUE(k.contains(V({1, 1})));
    EXPECT_FALSE(k.contains(R({Rational(3, 2), Rational(0)})));

    EXPECT_THROW(Polytope(2, {V({1, 0}), V({-1, 0}), V({0, 1})}, {Rational(1), Rational(0), Rational(1)}), InputError);
    EXPECT_THROW(Polytope(2, {V({1, 0}), V({-1, 0}), V({0, 1}), V({0, -1})},
                          {Rational(0), Rational(0), Rational(1), Rational(0)}),
                 InputError);
    EXPECT_THROW(Polytope(2, {V({1, 0})}, {Rational(1), Rational(2)}), InputError);
}

TEST(Shapes, FacetCounts) {
    EXPECT_EQ(shapes::cube(3).num_facets(), 6u);
    EXPECT_EQ(shapes::simplex(3).num_facets(), 4u);
    EXPECT_EQ(shapes::simplex_plus_facet(3).num_facets(), 5u);
    for (std::size_t m = 3; m <= 8; ++m) EXPECT_EQ(shapes::pyramid(m).num_facets(), m + 1) << m;
    const auto pyramid = shapes::pyramid(4).normals();
    EXPECT_EQ(pyramid[0], V({1, 0, 1}));
    EXPECT_EQ(pyramid[4], V({0, 0, -1}));
}

TEST(Fits, Examples) {
    const Polytope k = shapes::cube(2);
    const PointSet near(2, {V({5, 5}), R({Rational(11, 2), Rational(11, 2)})});
    const auto t = fits_in_translate(k, near);
    ASSERT_TRUE(t);
    for (const auto& x : near.points()) EXPECT_TRUE(k.contains(x - *t));
    EXPECT_FALSE(fits_in_translate(k, PointSet(2, {V({0, 0}), V({2, 0})})));

    const PointSet single(2, {V({-7, 3})});
    const auto ts = fits_in_translate(triangle2(), single);
    ASSERT_TRUE(ts);
    EXPECT_TRUE(triangle2().contains(single[0] - *ts));
}

TEST(StrongHull, Examples) {
    const Polytope square = shapes::cube(2);
    const PointSet diag(2, {V({0, 0}), V({1, 1})});
    EXPECT_TRUE(strong_hull_contains(square, diag, V({1, 0})));
    EXPECT_FALSE(strong_hull_contains(square, diag, R({Rational(3, 2), Rational(1, 2)})));
    EXPECT_TRUE(strong_hull_contains(triangle2(), diag, V({1, 0})));
    EXPECT_THROW(strong_hull_contains(square, PointSet(2, {V({0, 0}), V({2, 0})}), V({1, 0})), PreconditionError);
    EXPECT_FALSE(strong_hull_contains(square, PointSet(2, {}), V({0, 0})));
}

TEST(StrongHull, MinimalWitness) {
    const Polytope square = shapes::cube(2);
    const PointSet diag(2, {V({0, 0}), V({1, 1})});
    EXPECT_EQ(minimal_strong_witness(square, diag, V({1, 0})), diag);
    EXPECT_TRUE(is_minimal_strong_witness(square, diag, V({1, 0})));

    const PointSet pair(2, {R({Rational(1, 3), Rational(1, 4)}), V({1, 1})});
    EXPECT_EQ(minimal_strong_witness(square, pair, pair[0]), PointSet(2, {pair[0]}));
    EXPECT_THROW(minimal_strong_witness(square, diag, V({2, 2})), PreconditionError);
}

TEST(StrongHull, ScaledPyramidWitnessNeedsAllPoints) {
    const Polytope k = shapes::pyramid(4);
    const NormalSet h = k.normal_set();
    const WitnessReport w = cone_witness_points(h, {0, 1, 2, 3});
    const RVector origin = RVector::zero(3);
    bool found = false;
    for (int i = 0; i <= 8 && !found; ++i) {
        const PointSet x = w.points.scaled(Rational(1) / (Integer(1) << i));
        if (!fits_in_translate(k, x)) continue;
        if (strong_hull_contains(k, x, origin) && is_minimal_strong_witness(k, x, origin)) {
            EXPECT_EQ(minimal_strong_witness(k, x, origin).size(), 4u);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(Guard, Examples) {
    const Polytope square(2, {V({-1, 0}), V({0, 1}), V({1, 0}), V({0, -1})},
                          {Rational(0), Rational(1), Rational(1), Rational(0)});
    const PointSet diag(2, {V({0, 0}), V({1, 1})});
    const auto g = guard_assignment(square, diag, V({1, 0}));
    ASSERT_TRUE(g);
    EXPECT_EQ(square.normal((*g)[0]), V({-1, 0}));
    EXPECT_EQ(square.normal((*g)[1]), V({0, 1}));

    const auto standard = guard_assignment(shapes::cube(2), diag, V({1, 0}));
    ASSERT_TRUE(standard);
    EXPECT_EQ(shapes::cube(2).normal((*standard)[0]), V({-1, 0}));
    EXPECT_EQ(shapes::cube(2).normal((*standard)[1]), V({1, 0}));

    const auto lone = guard_assignment(square, PointSet(2, {V({0, 0})}), V({-1, 0}));
    ASSERT_TRUE(lone);
    EXPECT_GE(dot(square.normal((*lone)[0]), V({0, 0})), dot(square.normal((*lone)[0]), V({-1, 0})));

    EXPECT_FALSE(guard_assignment(square, PointSet(2, {V({0, 0}), V({1, 0}), V({2, 0})}), V({1, 0})));
}

TEST(HSubsetStrong, Examples) {
    corpus::Gen gen(41);
    const PointSet two(2, {V({0, 0}), V({1, 1})});
    for (int i = 0; i < 20; ++i) {
        EXPECT_TRUE(h_subset_strong_check(triangle2(), two, RVector{gen.rational(2, 4), gen.rational(2, 4)}));
    }
    for (const auto& x : two.points()) EXPECT_TRUE(h_subset_strong_check(shapes::cube(2), two, x));
}

TEST(StrongProperties, AgreesWithVertexOracle) {
    corpus::Gen gen(42);
    int members = 0;
    for (const auto& k : corpus::polytopes()) {
        for (int trial = 0; trial < 6; ++trial) {
            const PointSet x = corpus::points_in(gen, k, static_cast<std::size_t>(gen.between(1, 4)));
            if (x.empty()) continue;
            for (int q = 0; q < 4; ++q) {
                const RVector p = probe(gen, x);
                const bool got = strong_hull_contains(k, x, p);
                EXPECT_EQ(got, oracle::strong_hull_by_vertices(k, x, p));
                members += got ? 1 : 0;
            }
        }
    }
    EXPECT_GT(members, 20);
}

TEST(StrongProperties, HullInclusionGuardsAndBound) {
    corpus::Gen gen(43);
    for (const auto& k : corpus::polytopes()) {
        const auto inv = caratheodory_number(k.normal_set());
        const std::size_t bound = std::max(inv.caratheodory, k.num_facets() - 1);
        for (int trial = 0; trial < 5; ++trial) {
            const PointSet x = corpus::points_in(gen, k, static_cast<std::size_t>(gen.between(1, 5)));
            if (x.empty()) continue;
            for (int q = 0; q < 4; ++q) {
                const RVector p = probe(gen, x);
                EXPECT_TRUE(h_subset_strong_check(k, x, p));
                if (!strong_hull_contains(k, x, p)) continue;
                const PointSet w = minimal_strong_witness(k, x, p);
                EXPECT_LE(w.size(), bound);
                EXPECT_TRUE(guard_assignment(k, w, p).has_value());
            }
        }
    }
}

TEST(StrongProperties, CubeHullsCoincide) {
    corpus::Gen gen(44);
    for (std::size_t n = 2; n <= 3; ++n) {
        const Polytope cube = shapes::cube(n);
        for (int trial = 0; trial < 40; ++trial) {
            const PointSet x = corpus::points_in(gen, cube, static_cast<std::size_t>(gen.between(1, 5)));
            for (int q = 0; q < 4; ++q) {
                const RVector p = probe(gen, x);
                EXPECT_EQ(strong_hull_contains(cube, x, p), h_hull_contains(cube.normal_set(), x, p));
            }
        }
    }
}

TEST(StrongProperties, TranslateInvariance) {
    corpus::Gen gen(45);
    for (const auto& k : corpus::polytopes(6)) {
        for (int trial = 0; trial < 5; ++trial) {
            const PointSet x = corpus::points_in(gen, k, static_cast<std::size_t>(gen.between(1, 4)));
            if (x.empty()) continue;
            RVector v(k.dim());
            for (std::size_t i = 0; i < v.dim(); ++i) v[i] = gen.rational(20, 7);
            const RVector p = probe(gen, x);
            EXPECT_EQ(strong_hull_contains(k, x.translated(v), p + v), strong_hull_contains(k, x, p));
        }
    }
}
