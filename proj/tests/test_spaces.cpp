#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bicomb/spaces.hpp"
#include "generators.hpp"

using namespace bicomb;

namespace {

constexpr SpaceId kSpaces[] = {SpaceId::euclid, SpaceId::linf, SpaceId::hybrid};

// Straight from the formula, with no branch.
double hybrid_oracle(Point2 v) { return std::max(std::abs(v.x), std::sqrt(v.x * v.x + v.y * v.y) / std::sqrt(2.0)); }

}  // namespace

TEST(Norm, Examples)
{
    EXPECT_EQ(norm(SpaceId::hybrid, {1.0, 0.5}), 1.0);
    EXPECT_DOUBLE_EQ(norm(SpaceId::hybrid, {0.0, 2.0}), std::numbers::sqrt2);
    for (SpaceId s : kSpaces) EXPECT_EQ(norm(s, {0.0, 0.0}), 0.0);
    EXPECT_DOUBLE_EQ(norm(SpaceId::euclid, {3.0, -4.0}), 5.0);
    EXPECT_EQ(norm(SpaceId::linf, {3.0, -4.0}), 4.0);
}

TEST(Dist, Examples)
{
    EXPECT_EQ(dist(SpaceId::hybrid, {-3.0, 0.0}, {3.0, 0.0}), 6.0);
    EXPECT_EQ(dist(SpaceId::linf, {-2.0, 1.0}, {0.0, 0.0}), 2.0);
    // Euclidean length 2 delta = 1/32, scaled by sqrt(2)/2.
    EXPECT_NEAR(dist(SpaceId::hybrid, {0.0, 2.0 / 64.0}, {0.0, 0.0}), std::numbers::sqrt2 / 64.0, 1e-17);
}

TEST(Norm, HybridMatchesFormula)
{
    testgen::Gen gen(11);
    for (int i = 0; i < 10000; ++i) {
        const Point2 v = gen.point(-10.0, 10.0);
        EXPECT_NEAR(norm(SpaceId::hybrid, v), hybrid_oracle(v), 1e-14 * (1.0 + hybrid_oracle(v)));
    }
}

TEST(Norm, HybridIsAbsXExactlyBelowDiagonal)
{
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const Point2 v{-2.0 + 0.04 * i, -2.0 + 0.04 * j};
            if (std::abs(v.y) <= std::abs(v.x))
                EXPECT_EQ(norm(SpaceId::hybrid, v), std::abs(v.x)) << v;
            else
                EXPECT_GT(norm(SpaceId::hybrid, v), std::abs(v.x)) << v;
        }
    }
}

TEST(Norm, TriangleAndHomogeneity)
{
    testgen::Gen gen(12);
    for (SpaceId s : kSpaces) {
        for (int i = 0; i < 2000; ++i) {
            const Point2 v = gen.point(), w = gen.point();
            const double c = gen.real(-5.0, 5.0);
            EXPECT_LE(norm(s, v + w), norm(s, v) + norm(s, w) + 1e-12);
            EXPECT_NEAR(norm(s, c * v), std::abs(c) * norm(s, v), 1e-12);
            EXPECT_EQ(dist(s, v, w), dist(s, w, v));
        }
    }
}

TEST(Norm, UnitBallExtent)
{
    for (SpaceId s : kSpaces) {
        const Point2 e = unit_ball_extent(s);
        EXPECT_NEAR(norm(s, {e.x, 0.0}), 1.0, 1e-15);
        EXPECT_NEAR(norm(s, {0.0, e.y}), 1.0, 1e-15);
    }
}

TEST(SpaceNames, RoundTrip)
{
    for (SpaceId s : kSpaces) EXPECT_EQ(space_from_string(to_string(s)), s);
    EXPECT_THROW(space_from_string("l2"), std::invalid_argument);
}

TEST(Contains, Examples)
{
    EXPECT_TRUE(contains(Region::of(RegionTag::X), {0.0, 1.0 / 32.0}, 0.0));
    EXPECT_FALSE(contains(Region::of(RegionTag::X), {2.0, 0.01}, 0.0));
    EXPECT_TRUE(contains(Region::of(RegionTag::X1), {-0.5, -0.25}, 0.0));
    EXPECT_TRUE(contains(Region::of(RegionTag::X1), {-2.0, 1.0}, 0.0));
    EXPECT_FALSE(contains(Region::of(RegionTag::X1), {-2.0, -1.0}, 0.0));
    EXPECT_TRUE(contains(Region::of(RegionTag::X2), {-2.0, -1.0}, 0.0));
    EXPECT_TRUE(contains(Region::of(RegionTag::Y1), {-1.0, 1.0}, 0.0));
    EXPECT_FALSE(contains(Region::of(RegionTag::X1), {-1.0, 1.0}, 0.0));
    EXPECT_THROW(contains(Region::of(RegionTag::X), {0.0, 0.0}, -1.0), std::invalid_argument);
}

TEST(Contains, ToleranceRelaxesEveryInequality)
{
    const Region x = Region::of(RegionTag::X);
    EXPECT_FALSE(contains(x, {0.0, -1e-10}, 0.0));
    EXPECT_TRUE(contains(x, {0.0, -1e-10}, kMembershipTol));
    EXPECT_FALSE(contains(x, {3.0 + 1e-10, 0.0}, 0.0));
    EXPECT_TRUE(contains(x, {3.0 + 1e-10, 0.0}, kMembershipTol));
}

TEST(Contains, XImpliesBounds)
{
    testgen::Gen gen(13);
    const Region x = Region::of(RegionTag::X);
    for (int i = 0; i < 20000; ++i) {
        const Point2 p = gen.point(-3.5, 3.5);
        if (contains(x, p, 0.0)) {
            EXPECT_GE(p.x, -3.0);
            EXPECT_LE(p.x, 3.0);
            EXPECT_GE(p.y, 0.0);
        }
    }
}

TEST(Contains, TranslatedRegion)
{
    const Region x = Region::of(RegionTag::X).translated({5.0, 0.0});
    EXPECT_TRUE(contains(x, {5.0, 1.0 / 32.0}, 0.0));
    EXPECT_FALSE(contains(x, {0.0, 1.0 / 32.0}, 0.0));
}

TEST(Sample, Examples)
{
    const auto zero = sample_region(Region::of(RegionTag::Xzero), 1, 100);
    ASSERT_EQ(zero.size(), 100u);
    for (const Point2& p : zero) EXPECT_TRUE(contains(Region::of(RegionTag::Xzero), p, 0.0)) << p;

    const auto minus = sample_region(Region::of(RegionTag::Xminus), 1, 10);
    ASSERT_EQ(minus.size(), 10u);
    for (const Point2& p : minus) {
        EXPECT_EQ(p.y, 0.0);
        EXPECT_GE(p.x, -3.0);
        EXPECT_LE(p.x, -1.0);
    }

    for (const Point2& p : sample_region(Region::ball({0.0, 0.0}, 0.0, SpaceId::linf), 7, 5))
        EXPECT_EQ(p, (Point2{0.0, 0.0}));
}

TEST(Sample, PointsLieInRegionAndAreReproducible)
{
    for (RegionTag tag : {RegionTag::X, RegionTag::Xminus, RegionTag::Xzero, RegionTag::Xplus, RegionTag::X1,
                          RegionTag::X2, RegionTag::Y1, RegionTag::Y2, RegionTag::plane}) {
        const Region r = Region::of(tag);
        const auto a = sample_region(r, 99, 500);
        EXPECT_EQ(a, sample_region(r, 99, 500)) << describe(r);
        EXPECT_NE(a, sample_region(r, 100, 500)) << describe(r);
        for (const Point2& p : a) EXPECT_TRUE(contains(r, p, 0.0)) << describe(r) << " " << p;
    }
    const Region ball = Region::ball({1.0, -2.0}, 0.5, SpaceId::hybrid);
    for (const Point2& p : sample_region(ball, 3, 500)) EXPECT_TRUE(contains(ball, p, 0.0)) << p;
}

TEST(Sample, SegmentsOfXAreHit)
{
    // The antennas have zero area; they must still carry samples.
    int on_antenna = 0, on_x1_segment = 0;
    for (const Point2& p : sample_region(Region::of(RegionTag::X), 5, 3000))
        if (std::abs(p.x) >= 1.0) ++on_antenna;
    for (const Point2& p : sample_region(Region::of(RegionTag::X1), 5, 3000))
        if (p.x < -1.0) ++on_x1_segment;
    EXPECT_GT(on_antenna, 1000);
    EXPECT_GT(on_x1_segment, 500);
}

TEST(Sample, TranslatedRegion)
{
    // Shifting a point of the slanted segment rounds it off the line.
    const Region r = Region::of(RegionTag::X1).translated({0.0, 3.0});
    for (const Point2& p : sample_region(r, 4, 200)) EXPECT_TRUE(contains(r, p, kMembershipTol)) << p;
}
