#pragma once

#include <cmath>
#include <ostream>

namespace bicomb {

/// A point (or vector) of the plane.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
    friend constexpr Point2 operator*(double c, Point2 a) { return {c * a.x, c * a.y}; }
    friend constexpr Point2 operator*(Point2 a, double c) { return {c * a.x, c * a.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;

    friend std::ostream& operator<<(std::ostream& os, Point2 p)
    {
        return os << '(' << p.x << ", " << p.y << ')';
    }
};

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Affine interpolation (1-t)p + tq.
constexpr Point2 lerp(Point2 p, Point2 q, double t)
{
    return {(1.0 - t) * p.x + t * q.x, (1.0 - t) * p.y + t * q.y};
}

}  // namespace bicomb
