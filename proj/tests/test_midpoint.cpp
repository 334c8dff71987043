#include <gtest/gtest.h>

#include <cmath>

#include "bicomb/midpoint.hpp"
#include "generators.hpp"

using namespace bicomb;

namespace {

const Delta kDelta(1.0 / 64.0);

// A bicombing that never contracts: always returns the first endpoint.
Bicombing stuck()
{
    return Bicombing("stuck", Region::of(RegionTag::plane), SpaceId::euclid,
                     [](Point2 p, Point2 q, double t) { return t < 1.0 ? p : q; });
}

}  // namespace

TEST(MidpointConfig, Validation)
{
    EXPECT_THROW((MidpointConfig{0.0, 10}.validate()), std::invalid_argument);
    EXPECT_THROW((MidpointConfig{1e-10, 0}.validate()), std::invalid_argument);
    EXPECT_NO_THROW(MidpointConfig{}.validate());
}

TEST(Midpoint, LinearOneStep)
{
    const auto trace = midpoint_trace(make_linear(), Point2{0, 0}, Point2{2, 0});
    EXPECT_EQ(trace.point, (Point2{1, 0}));
    ASSERT_EQ(trace.gaps.size(), 2u);
    EXPECT_EQ(trace.gaps[1], 0.0);
}

TEST(Midpoint, EqualPoints)
{
    const Point2 x{-0.3, 0.2};
    const auto trace = midpoint_trace(make_sigma_X1(), x, x);
    EXPECT_EQ(trace.point, x);
    EXPECT_EQ(trace.gaps.size(), 1u);
}

TEST(Midpoint, SigmaX1Witness)
{
    const Bicombing b = make_sigma_X1();
    const Point2 x{-2, 1}, y{0, 0};
    ASSERT_EQ(b.distance(x, y), 2.0);
    const Point2 z = midpoint(b, x, y, MidpointConfig{1e-10, 64});
    EXPECT_NEAR(b.distance(x, z), 1.0, 1e-9);
    EXPECT_NEAR(b.distance(y, z), 1.0, 1e-9);
}

TEST(Midpoint, DivergenceIsReported)
{
    EXPECT_THROW(midpoint(stuck(), Point2{0, 0}, Point2{1, 0}, MidpointConfig{1e-10, 8}), MidpointDivergence);
}

TEST(Midpoint, GeometricContraction)
{
    for (const Bicombing& b : {make_sigma_X1(), make_tau_X1(), make_sigma_tilde_delta(kDelta)}) {
        const auto pts = b.sample(41, 2000);
        for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
            const auto trace = midpoint_trace(b, pts[k], pts[k + 1]);
            const double d = trace.gaps.front();
            for (std::size_t n = 0; n < trace.gaps.size(); ++n)
                EXPECT_LE(trace.gaps[n], std::ldexp(d, -static_cast<int>(n)) * (1.0 + 1e-9)) << b.name() << " n=" << n;
        }
    }
}

TEST(Midpoint, SymmetryAndHalfDistance)
{
    const MidpointConfig cfg{1e-10, 64};
    for (const Bicombing& b : {make_sigma_X1(), make_sigma_tilde_delta(kDelta)}) {
        const auto pts = b.sample(42, 2000);
        for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
            const Point2 x = pts[k], y = pts[k + 1];
            const Point2 m = midpoint(b, x, y, cfg);
            EXPECT_LE(b.distance(m, midpoint(b, y, x, cfg)), 2 * cfg.tol);
            const double half = 0.5 * b.distance(x, y);
            EXPECT_NEAR(b.distance(x, m), half, 2 * cfg.tol) << b.name();
            EXPECT_NEAR(b.distance(y, m), half, 2 * cfg.tol) << b.name();
        }
    }
}

TEST(Midpoint, AveragingBound)
{
    const MidpointConfig cfg{1e-10, 64};
    const Bicombing b = make_sigma_X1();
    const auto pts = b.sample(43, 4000);
    for (std::size_t k = 0; k + 3 < pts.size(); k += 4) {
        const Point2 x = pts[k], y = pts[k + 1], xb = pts[k + 2], yb = pts[k + 3];
        const double lhs = b.distance(midpoint(b, x, y, cfg), midpoint(b, xb, yb, cfg));
        EXPECT_LE(lhs, 0.5 * b.distance(x, xb) + 0.5 * b.distance(y, yb) + 2 * cfg.tol);
    }
}

TEST(Reversibilize, LinearIsUnchanged)
{
    const Bicombing lin = make_linear();
    const Bicombing rev = reversibilize(lin);
    EXPECT_EQ(rev.name(), "rev(linear[euclid])");
    testgen::Gen gen(44);
    for (int i = 0; i < 500; ++i) {
        const Point2 p = gen.point(), q = gen.point();
        const double t = gen.real(0.0, 1.0);
        EXPECT_LE(dist(SpaceId::euclid, rev(p, q, t), lin(p, q, t)), 1e-10);
    }
}

TEST(Reversibilize, SigmaX1Witness)
{
    const MidpointConfig cfg{1e-10, 64};
    const Bicombing rev = reversibilize(make_sigma_X1(), cfg);
    const Point2 p{-2, 1}, q{0, 0};
    EXPECT_LE(rev.distance(rev(p, q, 0.75), rev(q, p, 0.25)), 2 * cfg.tol);
}

TEST(Reversibilize, ReversibleAndConicalOnSamples)
{
    const MidpointConfig cfg{1e-10, 64};
    for (const Bicombing& base : {make_sigma_tilde_delta(kDelta), make_sigma_X1()}) {
        const Bicombing rev = reversibilize(base, cfg);
        const auto pts = base.sample(45, 800);
        for (std::size_t k = 0; k + 3 < pts.size(); k += 4) {
            const Point2 p = pts[k], q = pts[k + 1], p2 = pts[k + 2], q2 = pts[k + 3];
            for (double t : {0.0, 0.125, 0.5, 0.7, 1.0}) {
                EXPECT_LE(rev.distance(rev(p, q, t), rev(q, p, 1.0 - t)), 2 * cfg.tol) << base.name();
                const double lhs = rev.distance(rev(p, q, t), rev(p2, q2, t));
                EXPECT_LE(lhs, (1 - t) * rev.distance(p, p2) + t * rev.distance(q, q2) + 2 * cfg.tol) << base.name();
            }
            EXPECT_LE(rev.distance(rev(p, q, 0.0), p), 2 * cfg.tol);
            EXPECT_LE(rev.distance(rev(p, q, 1.0), q), 2 * cfg.tol);
        }
    }
}

TEST(Reversibilize, Idempotent)
{
    const MidpointConfig cfg{1e-10, 64};
    const Bicombing once = reversibilize(make_sigma_X1(), cfg);
    const Bicombing twice = reversibilize(once, cfg);
    const auto pts = once.sample(46, 400);
    for (std::size_t k = 0; k + 1 < pts.size(); k += 2)
        for (double t : {0.2, 0.5, 0.9})
            EXPECT_LE(once.distance(once(pts[k], pts[k + 1], t), twice(pts[k], pts[k + 1], t)), 4 * cfg.tol);
}
