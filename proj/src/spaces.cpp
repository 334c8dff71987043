#include "bicomb/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bicomb/rng.hpp"

namespace bicomb {

namespace {

constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

double cap_height(double x) { return std::max(0.0, 1.0 - x * x) / 32.0; }

bool in_X1(Point2 p, double tol)
{
    const double ax = std::abs(p.x) - 1.0;
    return p.x >= -2.0 - tol && p.x <= 1.0 + tol && p.y >= ax - tol && p.y <= std::abs(ax) + tol;
}

bool in_A1(Point2 p, double tol)
{
    return p.y >= std::abs(p.x + 1.0) - tol && p.y <= 1.0 + tol;
}

Point2 mirror(Point2 p) { return {p.x, -p.y}; }

bool contains_untranslated(const Region& r, Point2 p, double tol)
{
    switch (r.tag) {
    case RegionTag::X:
        return p.x >= -3.0 - tol && p.x <= 3.0 + tol && p.y >= -tol && p.y <= cap_height(p.x) + tol;
    case RegionTag::Xminus:
        return p.x >= -3.0 - tol && p.x <= -1.0 + tol && std::abs(p.y) <= tol;
    case RegionTag::Xplus:
        return p.x >= 1.0 - tol && p.x <= 3.0 + tol && std::abs(p.y) <= tol;
    case RegionTag::Xzero:
        return p.x > -1.0 - tol && p.x < 1.0 + tol && p.y >= -tol
            && p.y <= (1.0 - p.x * p.x) / 32.0 + tol;
    case RegionTag::X1:
        return in_X1(p, tol);
    case RegionTag::X2:
        return in_X1(mirror(p), tol);
    case RegionTag::Y1:
        return in_X1(p, tol) || in_A1(p, tol);
    case RegionTag::Y2:
        return in_X1(mirror(p), tol) || in_A1(mirror(p), tol);
    case RegionTag::ball:
        return norm(r.norm, p - r.center) <= r.radius + tol;
    case RegionTag::plane:
        return is_finite(p);
    }
    throw std::invalid_argument("contains: unknown region tag");
}

// A region is a union of pieces; each sample picks one piece uniformly.
struct Piece {
    enum class Kind { segment, area } kind;
    Point2 a{}, b{};       // segment endpoints, or bounding box corners (lo, hi)
    Region filter{};       // area membership test
};

std::vector<Piece> pieces_of(const Region& r)
{
    using K = Piece::Kind;
    const Region base{r.tag, r.center, r.radius, r.norm, {}};
    switch (r.tag) {
    case RegionTag::Xminus:
        return {{K::segment, {-3.0, 0.0}, {-1.0, 0.0}, {}}};
    case RegionTag::Xplus:
        return {{K::segment, {1.0, 0.0}, {3.0, 0.0}, {}}};
    case RegionTag::Xzero:
        return {{K::area, {-1.0, 0.0}, {1.0, 1.0 / 32.0}, base}};
    case RegionTag::X:
        return {{K::segment, {-3.0, 0.0}, {-1.0, 0.0}, {}},
                {K::area, {-1.0, 0.0}, {1.0, 1.0 / 32.0}, Region::of(RegionTag::Xzero)},
                {K::segment, {1.0, 0.0}, {3.0, 0.0}, {}}};
    case RegionTag::X1:
        return {{K::area, {-1.0, -1.0}, {1.0, 1.0}, base}, {K::segment, {-1.0, 0.0}, {-2.0, 1.0}, {}}};
    case RegionTag::X2:
        return {{K::area, {-1.0, -1.0}, {1.0, 1.0}, base}, {K::segment, {-1.0, 0.0}, {-2.0, -1.0}, {}}};
    case RegionTag::Y1:
    case RegionTag::Y2:
        return {{K::area, {-2.0, -1.0}, {1.0, 1.0}, base}};
    case RegionTag::ball: {
        const Point2 e = r.radius * unit_ball_extent(r.norm);
        return {{K::area, r.center - e, r.center + e, base}};
    }
    case RegionTag::plane:
        return {{K::area, {-4.0, -4.0}, {4.0, 4.0}, base}};
    }
    throw std::invalid_argument("sample_region: unknown region tag");
}

Point2 on_segment(Point2 a, Point2 b, double u)
{
    Point2 p = lerp(a, b, u);
    // Keep the X1/X2 antennas exactly on the line y = -x - 1 (resp. x + 1).
    if (a.x == -1.0 && b.x == -2.0)
        p.y = (b.y > 0.0) ? -p.x - 1.0 : -(-p.x - 1.0);
    return p;
}

}  // namespace

std::string_view to_string(SpaceId space)
{
    switch (space) {
    case SpaceId::euclid: return "euclid";
    case SpaceId::linf: return "linf";
    case SpaceId::hybrid: return "hybrid";
    }
    return "unknown";
}

SpaceId space_from_string(std::string_view name)
{
    if (name == "euclid") return SpaceId::euclid;
    if (name == "linf") return SpaceId::linf;
    if (name == "hybrid") return SpaceId::hybrid;
    throw std::invalid_argument("unknown space: " + std::string(name));
}

double norm(SpaceId space, Point2 v)
{
    const double ax = std::abs(v.x);
    const double ay = std::abs(v.y);
    switch (space) {
    case SpaceId::euclid:
        return std::hypot(v.x, v.y);
    case SpaceId::linf:
        return std::max(ax, ay);
    case SpaceId::hybrid:
        // Branch instead of a bare max so the |y| <= |x| case is exact.
        if (ay <= ax) return ax;
        return std::max(ax, kHalfSqrt2 * std::hypot(v.x, v.y));
    }
    throw std::invalid_argument("norm: unknown space");
}

double dist(SpaceId space, Point2 p, Point2 q) { return norm(space, p - q); }

Point2 unit_ball_extent(SpaceId space)
{
    if (space == SpaceId::hybrid) return {1.0, std::numbers::sqrt2};
    return {1.0, 1.0};
}

Region Region::of(RegionTag tag)
{
    if (tag == RegionTag::ball) throw std::invalid_argument("Region::of: use Region::ball for balls");
    Region r;
    r.tag = tag;
    return r;
}

Region Region::ball(Point2 center, double radius, SpaceId norm)
{
    if (!(radius >= 0.0)) throw std::invalid_argument("Region::ball: radius must be >= 0");
    Region r;
    r.tag = RegionTag::ball;
    r.center = center;
    r.radius = radius;
    r.norm = norm;
    return r;
}

Region Region::translated(Point2 shift) const
{
    Region r = *this;
    r.offset = offset + shift;
    return r;
}

std::string describe(const Region& region)
{
    std::ostringstream os;
    switch (region.tag) {
    case RegionTag::X: os << "X"; break;
    case RegionTag::Xminus: os << "X-"; break;
    case RegionTag::Xzero: os << "X0"; break;
    case RegionTag::Xplus: os << "X+"; break;
    case RegionTag::X1: os << "X1"; break;
    case RegionTag::X2: os << "X2"; break;
    case RegionTag::Y1: os << "Y1"; break;
    case RegionTag::Y2: os << "Y2"; break;
    case RegionTag::plane: os << "R^2"; break;
    case RegionTag::ball:
        os << "B_" << region.radius << region.center << '[' << to_string(region.norm) << ']';
        break;
    }
    if (region.offset != Point2{}) os << " + " << region.offset;
    return os.str();
}

bool contains(const Region& region, Point2 p, double tol)
{
    if (!(tol >= 0.0)) throw std::invalid_argument("contains: tol must be >= 0");
    return contains_untranslated(region, p - region.offset, tol);
}

std::vector<Point2> sample_region(const Region& region, std::uint64_t seed, std::size_t count)
{
    std::vector<Point2> out;
    out.reserve(count);
    if (region.tag == RegionTag::ball && region.radius == 0.0) {
        out.assign(count, region.center + region.offset);
        return out;
    }

    const std::vector<Piece> pieces = pieces_of(region);
    Rng rng(seed);
    std::size_t budget = 1000 * std::max<std::size_t>(count, 1);

    while (out.size() < count) {
        const Piece& piece = pieces[pieces.size() == 1 ? 0 : rng.below(pieces.size())];
        Point2 p;
        if (piece.kind == Piece::Kind::segment) {
            p = on_segment(piece.a, piece.b, rng.uniform());
        } else {
            bool found = false;
            while (!found) {
                if (budget == 0)
                    throw std::runtime_error("sample_region: rejection budget exhausted for "
                                             + describe(region));
                --budget;
                p = {rng.uniform(piece.a.x, piece.b.x), rng.uniform(piece.a.y, piece.b.y)};
                found = contains(piece.filter, p, 0.0);
            }
        }
        out.push_back(p + region.offset);
    }
    return out;
}

}  // namespace bicomb
