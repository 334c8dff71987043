#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bicomb/point.hpp"

namespace bicomb {

/// Norms on the plane used by the constructions.
///
///  - euclid: the Euclidean norm.
///  - linf:   the maximum norm.
///  - hybrid: max{|x|, (sqrt(2)/2) * ||(x, y)||_2}, which equals |x| exactly
///            when |y| <= |x|.
enum class SpaceId { euclid, linf, hybrid };

std::string_view to_string(SpaceId space);
SpaceId space_from_string(std::string_view name);

/// Default relaxation used when checking that computed points stay in a region.
inline constexpr double kMembershipTol = 1e-9;

double norm(SpaceId space, Point2 v);
double dist(SpaceId space, Point2 p, Point2 q);

/// Half-widths of the bounding box of the closed unit ball.
Point2 unit_ball_extent(SpaceId space);

/// Named subsets of the plane.
///
/// X is the antenna space: the segments X- = [-3,-1] x {0} and X+ = [1,3] x {0}
/// joined by the thin parabolic cap X0 = {-1 < x < 1, 0 <= y <= (1 - x^2)/32}.
/// X1 is the closed diamond |x| + |y| <= 1 together with the segment from
/// (-1, 0) to (-2, 1); X2 is its mirror image under (x, y) -> (x, -y). Y1 adds
/// the triangle A1 = {|x + 1| <= y <= 1} to X1, and Y2 is the mirror of Y1.
enum class RegionTag { X, Xminus, Xzero, Xplus, X1, X2, Y1, Y2, ball, plane };

struct Region {
    RegionTag tag = RegionTag::plane;
    // Only meaningful for balls.
    Point2 center{};
    double radius = 0.0;
    SpaceId norm = SpaceId::euclid;
    /// Every region may be translated; membership is tested at p - offset.
    Point2 offset{};

    static Region of(RegionTag tag);
    static Region ball(Point2 center, double radius, SpaceId norm);

    [[nodiscard]] Region translated(Point2 shift) const;
};

std::string describe(const Region& region);

/// True iff p satisfies every defining inequality of the region relaxed by tol.
bool contains(const Region& region, Point2 p, double tol = 0.0);

/// Deterministic sample of `count` points of the region.
///
/// Regions made of area pieces and segments pick a piece uniformly per point;
/// segments are sampled along their parameter, areas by rejection from the
/// bounding box with a budget of 1000 * count attempts.
/// Throws std::runtime_error when the rejection budget runs out.
std::vector<Point2> sample_region(const Region& region, std::uint64_t seed, std::size_t count);

}  // namespace bicomb
