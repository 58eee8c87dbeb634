#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace slicebound;

TEST(Validate, AcceptsBasicDiagrams) {
    EXPECT_NO_THROW(validate(fixtures::positive_trefoil()));
    EXPECT_NO_THROW(validate(fixtures::unknot()));
    EXPECT_NO_THROW(validate(fixtures::figure_eight()));
}

TEST(Validate, EdgeUsedThreeTimesIsNamed) {
    std::vector<Crossing> xs = fixtures::positive_trefoil().crossings();
    xs[1].edges[1] = xs[0].edges[1];
    try {
        Diagram bad(xs, 6);
        FAIL() << "accepted a diagram with a triple edge";
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("edge " + std::to_string(xs[0].edges[1] + 1)), std::string::npos) << what;
        EXPECT_NE(what.find("more than twice"), std::string::npos) << what;
    }
}

TEST(Validate, RejectsBadSignsAndIds) {
    EXPECT_THROW(Diagram({{{0, 0, 1, 1}, 0}}, 2), ValidationError);
    EXPECT_THROW(Diagram({{{0, 0, 1, 7}, 1}}, 2), ValidationError);
    EXPECT_THROW(Diagram({}, 0), ValidationError);
}

TEST(Validate, RejectsNonPlanarGluing) {
    // Valid orientations and label counts, but the gluing has genus.
    const PdCode pd = parse_pd("X[1,3,2,4] X[4,2,1,3]");
    EXPECT_THROW(Diagram::from_pd(pd), ValidationError);
}

TEST(Diagram, SignsFromPd) {
    // Knot Atlas trefoil is left-handed.
    const Diagram d = fixtures::pd(fixtures::kTrefoilPd);
    EXPECT_EQ(d.n_minus(), 3);
    EXPECT_EQ(d.writhe(), -3);
    const Diagram f = fixtures::figure_eight();
    EXPECT_EQ(f.n_plus(), 2);
    EXPECT_EQ(f.n_minus(), 2);
    EXPECT_EQ(f.n_plus() + f.n_minus(), f.crossing_count());
}

TEST(Diagram, HopfLinkHasTwoComponents) {
    const Diagram h = fixtures::braid("2: [1,1]");
    EXPECT_EQ(h.component_count(), 2);
    EXPECT_TRUE(h.is_connected());
    EXPECT_FALSE(h.is_knot());
}

TEST(Mirror, TrefoilSignsFlip) {
    const Diagram m = fixtures::negative_trefoil();
    EXPECT_EQ(m.writhe(), -3);
    EXPECT_EQ(m.n_plus(), 0);
    for (const Crossing& c : m.crossings()) EXPECT_EQ(c.sign, -1);
}

TEST(Mirror, UnknotIsFixed) { EXPECT_EQ(mirror(fixtures::unknot()), fixtures::unknot()); }

TEST(Mirror, InvolutionAndSeifertCirclesOnRandomWords) {
    for (const auto& w : fixtures::random_corpus(400, 5, 12, 11)) {
        const Diagram d = braid_closure(w);
        const Diagram m = mirror(d);
        EXPECT_EQ(mirror(m), d) << to_string(w);
        EXPECT_EQ(m.writhe(), -d.writhe());
        EXPECT_EQ(oriented_resolution(m).count, oriented_resolution(d).count);
        EXPECT_EQ(is_positive(d), is_negative(m));
        EXPECT_EQ(is_alternating(d), is_alternating(m));
        EXPECT_EQ(m.component_count(), d.component_count());
    }
}

TEST(Predicates, PositiveAndNegative) {
    const Diagram t = fixtures::positive_trefoil();
    EXPECT_TRUE(is_positive(t));
    EXPECT_FALSE(is_negative(t));
    EXPECT_FALSE(is_positive(mirror(t)));
    EXPECT_TRUE(is_negative(mirror(t)));
    EXPECT_TRUE(is_positive(fixtures::unknot()));
    EXPECT_TRUE(is_negative(fixtures::unknot()));
}

TEST(Predicates, Alternating) {
    EXPECT_TRUE(is_alternating(fixtures::figure_eight()));
    EXPECT_TRUE(is_alternating(fixtures::unknot()));
    // The closed 2-braid sigma_1^3 alternates: each strand goes over, under, over, ...
    EXPECT_TRUE(is_alternating(fixtures::positive_trefoil()));
    EXPECT_FALSE(is_alternating(fixtures::braid("2: [1,1,-1]")));
    EXPECT_FALSE(is_alternating(fixtures::braid("3: [1,2,1,2]")));
    EXPECT_TRUE(is_alternating(fixtures::braid("3: [1,-2,1,-2]")));
}

TEST(Predicates, BraidSignCondition) {
    EXPECT_TRUE(braid_sign_condition({3, {1, -2, 1, -2}}));
    EXPECT_FALSE(braid_sign_condition({2, {1, -1}}));
    EXPECT_TRUE(braid_sign_condition({2, {}}));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        BraidWord w = random_braid(4, static_cast<int>(seed % 9), seed);
        const bool before = braid_sign_condition(w);
        for (int& l : w.letters) l = -l;
        EXPECT_EQ(braid_sign_condition(w), before);
    }
}
