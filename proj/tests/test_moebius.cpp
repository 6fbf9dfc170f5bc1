#include <gtest/gtest.h>

#include <random>

#include "geoforge/moebius.hpp"
#include "geoforge/word.hpp"
#include "oracles.hpp"

using namespace geoforge;

namespace {

Real R(const char* s, unsigned bits = 128) { return Real(std::string(s), bits); }

bool close(const Real& x, const Real& y, const char* tol = "1e-30") { return abs(x - y) < R(tol); }

GroupElement A() { return GroupElement(1, 2, 0, 1); }
GroupElement B() { return GroupElement(1, 0, 2, 1); }

} // namespace

TEST(Classify, Examples) {
    EXPECT_EQ(classify(GroupElement(1, 2, 0, 1)), MoebiusKind::parabolic);
    EXPECT_EQ(classify(GroupElement(5, 2, 2, 1)), MoebiusKind::hyperbolic);
    EXPECT_EQ(classify(GroupElement(1, 0, 0, 1)), MoebiusKind::identity);
    EXPECT_EQ(classify(GroupElement(-1, 0, 0, -1)), MoebiusKind::identity);
    EXPECT_EQ(classify(GroupElement(0, -1, 1, 0)), MoebiusKind::elliptic);
    EXPECT_EQ(A() * B(), GroupElement(5, 2, 2, 1));
}

TEST(GroupElement, SignNormalizationAndDeterminant) {
    const GroupElement g(-5, -2, -2, -1);
    EXPECT_EQ(g, GroupElement(5, 2, 2, 1));
    EXPECT_EQ(GroupElement(0, -1, 1, 0), GroupElement(0, 1, -1, 0));
    EXPECT_THROW(GroupElement(2, 0, 0, 1), Error);
    EXPECT_EQ(g * g.inverse(), GroupElement::identity());
}

TEST(TranslationLength, Examples) {
    EXPECT_TRUE(close(translation_length(GroupElement(5, 2, 2, 1), 128),
                      R("3.52549434807817210093043729991916923611")));
    // B A^3 in Gamma(2): trace 14.
    const GroupElement ba3 = B() * A() * A() * A();
    EXPECT_EQ(ba3.abs_trace(), 14);
    EXPECT_TRUE(close(translation_length(ba3, 128), R("5.26783158769926683450018538923187377611")));
    try {
        translation_length(GroupElement(1, 2, 0, 1), 128);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_hyperbolic);
    }
}

TEST(AxisOf, Examples) {
    EXPECT_EQ(axis_of(GroupElement(5, 2, 2, 1)), Axis(1, -2, -1));
    EXPECT_EQ(axis_of(GroupElement(2, 1, 1, 1)), Axis(1, -1, -1));
    EXPECT_EQ(Axis(2, -4, -2), Axis(1, -2, -1));
    EXPECT_THROW(axis_of(GroupElement(1, 2, 0, 1)), Error);
    const auto [lo, hi] = endpoints(Axis(1, -2, -1), 128);
    EXPECT_TRUE(close(*lo, 1 - sqrt(Real(2L, 128))));
    EXPECT_TRUE(close(*hi, 1 + sqrt(Real(2L, 128))));
}

TEST(AxesCross, Examples) {
    // {-1, 1}: z^2 - 1; {0, 3}: z^2 - 3z; {2, 3}: z^2 - 5z + 6
    const Axis unit(1, 0, -1);
    EXPECT_TRUE(axes_cross(unit, Axis(1, -3, 0)));
    EXPECT_FALSE(axes_cross(unit, Axis(1, -5, 6)));
    const GroupElement ab = A() * B();
    const GroupElement conj = B() * ab * B().inverse();
    EXPECT_TRUE(axes_cross(axis_of(ab), axis_of(conj)));
    // Independent numeric check of the same pair.
    EXPECT_TRUE(oracle::numeric_linked(oracle::numeric_axis(ab, 256), oracle::numeric_axis(conj, 256)));
}

TEST(AxesCross, VerticalAxes) {
    // {0, inf}: B z = 0 -> (0, 1, 0)
    const Axis vertical(0, 1, 0);
    EXPECT_TRUE(axes_cross(vertical, Axis(1, 0, -1)));
    EXPECT_FALSE(axes_cross(vertical, Axis(1, -5, 6)));
}

TEST(AxesCross, DegenerateInputs) {
    const Axis unit(1, 0, -1);
    try {
        axes_cross(unit, unit);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degenerate_axes);
    }
    try {
        axes_cross(unit, Axis(1, -3, 2));  // shares the endpoint 1
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degenerate_axes);
    }
}

TEST(HyperbolicDistance, Examples) {
    const Real zero(0L, 128), one(1L, 128), two(2L, 128);
    EXPECT_TRUE(close(hyperbolic_distance({zero, one}, {zero, two}), log(two)));
    EXPECT_TRUE(hyperbolic_distance({zero, one}, {zero, one}).is_zero());
    EXPECT_TRUE(close(hyperbolic_distance({zero, one}, {one, one}), R("0.962423650119206894995517826848736846270")));
    try {
        make_point(zero, zero);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_point);
    }
    EXPECT_THROW(hyperbolic_distance({zero, one}, {zero, -one}), Error);
}

namespace {

GroupElement random_element(std::mt19937_64& rng, std::size_t max_len) {
    return evaluate(oracle::random_reduced_word(rng, 1, max_len));
}

} // namespace

TEST(MoebiusProperties, ConjugationInvariance) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const GroupElement m = random_element(rng, 10), n = random_element(rng, 10);
        const GroupElement c = m * n * m.inverse();
        EXPECT_EQ(classify(c), classify(n));
        EXPECT_EQ(c.abs_trace(), n.abs_trace());
        if (classify(n) == MoebiusKind::hyperbolic) {
            EXPECT_EQ(translation_length(c, 128), translation_length(n, 128));
            EXPECT_EQ(axis_of(c), pushforward(m, axis_of(n)));
        }
    }
}

TEST(MoebiusProperties, CrossingMatchesNumericInterlacing) {
    std::mt19937_64 rng(11);
    int checked = 0, linked = 0;
    while (checked < 10000) {
        const GroupElement x = random_element(rng, 8), y = random_element(rng, 8);
        if (classify(x) != MoebiusKind::hyperbolic || classify(y) != MoebiusKind::hyperbolic) continue;
        const Axis ax = axis_of(x), ay = axis_of(y);
        if (ax == ay || axes_resultant(ax, ay) == 0) continue;
        const bool exact = axes_cross(ax, ay);
        EXPECT_EQ(exact, axes_cross(ay, ax));
        EXPECT_EQ(exact, oracle::numeric_linked(oracle::numeric_axis(x, 256), oracle::numeric_axis(y, 256)))
            << ax << " vs " << ay;
        linked += exact;
        ++checked;
    }
    EXPECT_GT(linked, 100);
    EXPECT_LT(linked, 9900);
}

TEST(MoebiusProperties, LengthIncreasesWithTrace) {
    Real previous(0L, 128);
    for (int t = 3; t < 400; ++t) {
        const Real l = length_from_trace(Integer(t), 128);
        EXPECT_GT(l, previous);
        previous = l;
    }
}
