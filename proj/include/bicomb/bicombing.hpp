#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bicomb/point.hpp"
#include "bicomb/spaces.hpp"

namespace bicomb {

/// A geodesic bicombing on a planar region: for every ordered pair (p, q) of
/// domain points a path t -> b(p, q, t) with b(p, q, 0) = p and b(p, q, 1) = q.
///
/// Instances are immutable; copies share nothing mutable.
class Bicombing {
public:
    using point_type = Point2;
    using Eval = std::function<Point2(Point2, Point2, double)>;

    Bicombing(std::string name, Region domain, SpaceId space, Eval eval);

    Point2 operator()(Point2 p, Point2 q, double t) const { return eval_(p, q, t); }

    double distance(Point2 a, Point2 b) const { return dist(space_, a, b); }
    bool in_domain(Point2 p, double tol = kMembershipTol) const { return contains(domain_, p, tol); }
    std::vector<Point2> sample(std::uint64_t seed, std::size_t count) const
    {
        return sample_region(domain_, seed, count);
    }

    const std::string& name() const { return name_; }
    const Region& domain() const { return domain_; }
    SpaceId space() const { return space_; }

private:
    std::string name_;
    Region domain_;
    SpaceId space_;
    Eval eval_;
};

/// Perturbation height of the antenna bicombings, restricted to [0, 1/64].
class Delta {
public:
    static constexpr double kMax = 1.0 / 64.0;

    explicit Delta(double value);
    double value() const { return value_; }

private:
    double value_;
};

// ---------------------------------------------------------------------------
// Closed-form evaluators. Each throws std::domain_error when an endpoint lies
// outside its domain (membership tolerance kMembershipTol) and
// std::invalid_argument when t is outside [0, 1].
// ---------------------------------------------------------------------------

/// (1 - t) p + t q.
Point2 linear(Point2 p, Point2 q, double t);

/// The reversible, convex, non-consistent bicombing on the antenna space X.
///
/// Geodesics are linear inside X0. A geodesic from X- to X+ whose horizontal
/// extent exceeds 4 bulges upward along delta * (extent - 4) * (1 - x^2);
/// geodesics entering X0 from one antenna are kinked straight lines.
Point2 sigma_delta(Delta delta, Point2 p, Point2 q, double t);

/// Same as sigma_delta except that geodesics from X+ to X- run flat along the
/// x-axis, which breaks reversibility.
Point2 sigma_tilde_delta(Delta delta, Point2 p, Point2 q, double t);

/// Reflection (x, y) -> (x, -y).
Point2 fold_s(Point2 p);

enum class FoldDirection { forward, inverse };

/// The isometry X2 -> X1 (forward) or X1 -> X2 (inverse) that reflects the
/// antenna x in [-2, -1] and fixes the diamond.
Point2 fold_f(Point2 p, FoldDirection direction);

/// 1-Lipschitz retraction of Y1 u Y2 onto X1 u X2 for the maximum norm.
Point2 retraction_pi(Point2 p);

/// Non-reversible conical bicombing on (X1, linf): retracted straight lines
/// when p.x <= q.x, and the same construction conjugated by the fold otherwise.
Point2 sigma_X1(Point2 p, Point2 q, double t);

/// Modification of sigma_X1 through the averaged midpoint
/// m = (sigma_X1(p, q, 1/2) + sigma_X1(q, p, 1/2)) / 2. Has the midpoint
/// property without being reversible. Throws std::logic_error if m leaves X1.
Point2 tau_X1(Point2 p, Point2 q, double t);

/// Translation of a bicombing: x, y -> shift + base(x - shift, y - shift, t).
Point2 pushforward(Point2 shift, const Bicombing& base, Point2 p, Point2 q, double t);

// ---------------------------------------------------------------------------
// Bicombing objects wrapping the evaluators above.
// ---------------------------------------------------------------------------

Bicombing make_linear(SpaceId space = SpaceId::euclid);
Bicombing make_sigma_delta(Delta delta);
Bicombing make_sigma_tilde_delta(Delta delta);
Bicombing make_sigma_X1();
Bicombing make_tau_X1();
Bicombing make_pushforward(Point2 shift, Bicombing base);

}  // namespace bicomb
