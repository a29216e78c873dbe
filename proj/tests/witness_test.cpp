#include "hcara/cara_numbers.hpp"
#include "hcara/errors.hpp"
#include "hcara/shapes.hpp"
#include "hcara/witness.hpp"

#include "oracles/corpus.hpp"

#include <gtest/gtest.h>

using namespace hcara;

namespace {

RVector V(std::initializer_list<long> v) { return RVector::from_ints(v); }

NormalSet box2() { return NormalSet(2, {V({1, 0}), V({-1, 0}), V({0, 1}), V({0, -1})}); }

NormalSet square_pyramid() {
    return NormalSet(3, {V({1, 0, 1}), V({-1, 0, 1}), V({0, 1, 1}), V({0, -1, 1}), V({0, 0, -1})});
}

void expect_cone_identities(const NormalSet& h, const IndexSet& b, const PointSet& x) {
    ASSERT_EQ(x.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Rational v = dot(h[b[j]], x[i]);
            if (i == j) {
                EXPECT_EQ(v, 0);
            } else {
                EXPECT_LE(v, -1);
            }
        }
    }
}

}  // namespace

TEST(HellyWitness, OppositePair) {
    const NormalSet h(2, {V({1, 0}), V({-1, 0})});
    const WitnessReport r = helly_witness_points(h, {0, 1});
    EXPECT_EQ(r.points, PointSet(2, {V({1, 0}), V({-1, 0})}));
    EXPECT_TRUE(r.valid());
    EXPECT_EQ(r.kind, WitnessKind::Helly);
}

TEST(HellyWitness, Triangle) {
    const NormalSet h(2, {V({-1, 0}), V({0, -1}), V({1, 1})});
    const WitnessReport r = helly_witness_points(h, {0, 1, 2});
    EXPECT_EQ(r.points, PointSet(2, {V({-2, 1}), V({1, -2}), V({1, 1})}));
    EXPECT_TRUE(r.valid());
    ASSERT_TRUE(r.assignment);
    EXPECT_EQ(r.assignment->normal_of_point, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(HellyWitness, SimplexIdentities) {
    for (std::size_t n = 2; n <= 4; ++n) {
        const NormalSet h = shapes::simplex(n).normal_set();
        IndexSet all(h.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        const WitnessReport r = helly_witness_points(h, all);
        ASSERT_TRUE(r.valid());
        RVector sum(n);
        for (const auto& x : r.points.points()) sum += x;
        EXPECT_TRUE(sum.is_zero());
    }
}

TEST(HellyWitness, RejectsNonCircuits) {
    EXPECT_THROW(helly_witness_points(box2(), {0, 2}), InputError);
    EXPECT_THROW(helly_witness_points(box2(), {0}), InputError);
    EXPECT_THROW(helly_witness_points(square_pyramid(), {0, 1, 2, 3, 4}), InputError);
}

TEST(ConeWitness, Square) {
    const NormalSet h = box2();
    const WitnessReport r = cone_witness_points(h, {0, 2});
    expect_cone_identities(h, {0, 2}, r.points);
    EXPECT_TRUE(r.covering_ok);
    EXPECT_TRUE(r.drop_one_ok);
    EXPECT_EQ(r.normals_used, (IndexSet{0, 2}));
}

TEST(ConeWitness, SquarePyramid) {
    const NormalSet h = square_pyramid();
    const WitnessReport r = cone_witness_points(h, {0, 1, 2, 3});
    expect_cone_identities(h, {0, 1, 2, 3}, r.points);
    EXPECT_TRUE(r.valid());
    EXPECT_TRUE(covering_holds(h, r.points));
}

TEST(ConeWitness, SingleNormal) {
    const NormalSet h(2, {V({1, 0})});
    const WitnessReport r = cone_witness_points(h, {0});
    ASSERT_EQ(r.points.size(), 1u);
    EXPECT_EQ(dot(h[0], r.points[0]), 0);
    EXPECT_TRUE(r.valid());
}

TEST(ConeWitness, Preconditions) {
    const NormalSet tri(2, {V({-1, 0}), V({0, -1}), V({1, 1})});
    EXPECT_THROW(cone_witness_points(tri, {0, 1, 2}), PreconditionError);
    // (2,1) lies in pos{(1,0),(1,1)}.
    const NormalSet fan(2, {V({1, 0}), V({1, 1}), V({2, 1})});
    EXPECT_THROW(cone_witness_points(fan, {0, 1}), PreconditionError);
}

TEST(ConeWitness, NonMaximalBaseIsReported) {
    // Undersized conical bases either still cover H (and must then validate)
    // or are rejected with the NOT-MAXIMAL-B marker.
    int reported = 0;
    for (const auto& h : corpus::normal_sets()) {
        const auto cone = cone_number(h);
        for (std::size_t k = 1; k < cone.size; ++k) {
            for_each_subset_of_size(h.size(), k, [&](const IndexSet& b) {
                const auto vs = h.select(b);
                if (!is_conical_position(vs) || !positive_hull_free_of_rest(h, b)) return false;
                try {
                    const WitnessReport r = cone_witness_points(h, b);
                    EXPECT_TRUE(r.valid());
                } catch (const NotMaximalError& e) {
                    EXPECT_EQ(std::string(e.what()).rfind("NOT-MAXIMAL-B", 0), 0u);
                    ++reported;
                }
                return false;
            });
        }
    }
    EXPECT_GT(reported, 0);
}

TEST(Validate, Examples) {
    const NormalSet h = box2();
    const WitnessReport a = validate_witness(h, PointSet(2, {V({0, -1}), V({-1, 0})}));
    EXPECT_TRUE(a.covering_ok);
    EXPECT_TRUE(a.drop_one_ok);

    const WitnessReport b = validate_witness(h, PointSet(2, {V({0, -1}), V({-1, 0}), V({1, 1})}));
    EXPECT_TRUE(b.covering_ok);
    EXPECT_FALSE(b.drop_one_ok);

    const WitnessReport c = validate_witness(NormalSet(2, {V({1, 0})}), PointSet(2, {V({-1, 0})}));
    EXPECT_FALSE(c.covering_ok);
}

// Both constructions attain their invariant on every corpus set, and the
// resulting X is its own minimal H-witness for 0.
TEST(WitnessProperties, CorpusAttainment) {
    for (const auto& h : corpus::normal_sets()) {
        const auto inv = caratheodory_number(h);
        const RVector origin = RVector::zero(h.dim());
        if (inv.helly >= 2) {
            const WitnessReport r = helly_witness_points(h, inv.helly_witness);
            EXPECT_TRUE(r.valid());
            EXPECT_EQ(r.points.size(), inv.helly);
            IndexSet all(r.points.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            EXPECT_EQ(minimal_h_witness_indices(h, r.points, origin), all);

            const auto vs = h.select(inv.helly_witness);
            for (std::size_t i = 0; i < vs.size(); ++i) {
                for (std::size_t j = 0; j < vs.size(); ++j) {
                    if (i != j) EXPECT_LT(dot(vs[j], r.points[i]), 0);
                }
                EXPECT_GT(dot(vs[i], r.points[i]), 0);
            }
        }
        if (inv.cone >= 1) {
            const WitnessReport r = cone_witness_points(h, inv.cone_witness);
            EXPECT_TRUE(r.valid());
            EXPECT_EQ(r.points.size(), inv.cone);
            expect_cone_identities(h, inv.cone_witness, r.points);
            IndexSet all(r.points.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            EXPECT_EQ(minimal_h_witness_indices(h, r.points, origin), all);
        }
    }
}

TEST(WitnessKindText, RoundTrip) {
    EXPECT_EQ(parse_witness_kind("helly"), WitnessKind::Helly);
    EXPECT_EQ(parse_witness_kind("cone"), WitnessKind::Cone);
    EXPECT_EQ(parse_witness_kind(to_string(WitnessKind::Cone)), WitnessKind::Cone);
    EXPECT_THROW(parse_witness_kind("simplex"), InputError);
}
