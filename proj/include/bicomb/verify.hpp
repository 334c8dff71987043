#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "bicomb/bicombing.hpp"
#include "bicomb/funcspace.hpp"
#include "bicomb/rng.hpp"

namespace bicomb {

enum class Property { geodesic, conical, convex, consistent, reversible, midpoint_property, linear };

std::string_view to_string(Property property);
Property property_from_string(std::string_view name);

/// Sampling plan shared by all property checks.
struct SampleConfig {
    std::uint64_t seed = 42;
    std::size_t tuples = 1000;  ///< number of sampled point pairs or quadruples
    std::size_t t_grid = 33;    ///< t values k / (t_grid - 1), k = 0..t_grid-1
    double tol = 1e-9;

    void validate() const;
    std::vector<double> grid() const;
};

/// Default step sizes of the discrete convexity criterion.
inline const std::vector<double> kConvexSteps{1.0 / 64.0, 1.0 / 128.0};

struct Witness {
    std::vector<std::vector<double>> points;  ///< coordinates of each point of the tuple
    std::vector<std::string> param_names;
    std::vector<double> params;
    double violation = 0.0;  ///< violation at this (simplified) tuple
};

struct PropertyReport {
    Property property = Property::geodesic;
    std::string bicombing;
    bool passed = true;
    double worst_violation = 0.0;
    double tol = 0.0;
    std::optional<Witness> witness;  ///< present iff !passed
    std::size_t samples_evaluated = 0;
    std::uint64_t seed = 0;
};

inline std::vector<double> coordinates(const Point2& p) { return {p.x, p.y}; }

inline std::vector<double> coordinates(const MonotoneFn& f)
{
    std::vector<double> out;
    out.reserve(2 * f.size());
    for (const Breakpoint& b : f.breakpoints()) {
        out.push_back(b.x);
        out.push_back(b.v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Per-tuple defects. Each returns the amount by which one sampled instance of
// the property is violated (<= 0 or ~0 when it holds). They throw
// std::invalid_argument for tuples outside the admissible parameter range.
// ---------------------------------------------------------------------------

/// |d(b(p,q,s), b(p,q,t)) - |s - t| d(p, q)|, also covering the endpoint
/// identities when s = 0 or t = 1.
template <class B, class P = typename B::point_type>
double geodesic_defect(const B& b, const P& p, const P& q, double s, double t)
{
    const P ps = b(p, q, s);
    const P pt = b(p, q, t);
    double v = std::abs(b.distance(ps, pt) - std::abs(s - t) * b.distance(p, q));
    if (s == 0.0) v = std::max(v, b.distance(ps, p));
    if (t == 1.0) v = std::max(v, b.distance(pt, q));
    return v;
}

/// d(b(p,q,t), b(p',q',t)) - (1 - t) d(p, p') - t d(q, q').
template <class B, class P = typename B::point_type>
double conical_defect(const B& b, const P& p, const P& q, const P& p2, const P& q2, double t)
{
    return b.distance(b(p, q, t), b(p2, q2, t)) - ((1.0 - t) * b.distance(p, p2) + t * b.distance(q, q2));
}

/// 2 f(t) - f(t - step) - f(t + step) for f(s) = d(b(p,q,s), b(p',q',s)).
template <class B, class P = typename B::point_type>
double convex_defect(const B& b, const P& p, const P& q, const P& p2, const P& q2, double t, double step)
{
    if (!(step > 0.0 && t - step >= 0.0 && t + step <= 1.0))
        throw std::invalid_argument("convex_defect: t +- step must lie in [0, 1]");
    auto f = [&](double s) { return b.distance(b(p, q, s), b(p2, q2, s)); };
    return 2.0 * f(t) - f(t - step) - f(t + step);
}

/// d(b(b(p,q,s1), b(p,q,s2), u), b(p, q, (1 - u) s1 + u s2)) for s1 <= s2.
template <class B, class P = typename B::point_type>
double consistency_defect(const B& b, const P& p, const P& q, double s1, double s2, double u)
{
    if (!(0.0 <= s1 && s1 <= s2 && s2 <= 1.0 && 0.0 <= u && u <= 1.0))
        throw std::invalid_argument("consistency_defect: need 0 <= s1 <= s2 <= 1 and u in [0, 1]");
    const P sub = b(b(p, q, s1), b(p, q, s2), u);
    return b.distance(sub, b(p, q, (1.0 - u) * s1 + u * s2));
}

/// d(b(p,q,t), b(q,p,1 - t)).
template <class B, class P = typename B::point_type>
double reversibility_defect(const B& b, const P& p, const P& q, double t)
{
    return b.distance(b(p, q, t), b(q, p, 1.0 - t));
}

/// d(b(p,q,1/2), b(q,p,1/2)).
template <class B, class P = typename B::point_type>
double midpoint_property_defect(const B& b, const P& p, const P& q)
{
    return b.distance(b(p, q, 0.5), b(q, p, 0.5));
}

/// d(b(p,q,t), (1 - t) p + t q).
double linearity_defect(const Bicombing& b, Point2 p, Point2 q, double t);

namespace detail {

// Keeps the worst violation seen and the tuple that produced it. Ties keep the
// earliest tuple, so results depend only on the sampling order.
template <class P>
struct Tracker {
    double worst = 0.0;
    bool has = false;
    std::vector<P> points;
    std::vector<double> params;
    std::size_t evaluated = 0;

    void offer(double v, std::initializer_list<double> prm, std::initializer_list<const P*> pts)
    {
        ++evaluated;
        if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
        if (v > worst) {
            worst = v;
            has = true;
            params.assign(prm.begin(), prm.end());
            points.clear();
            for (const P* p : pts) points.push_back(*p);
        }
    }
};

inline std::optional<double> snap_param(double v, int level)
{
    const double scale = std::ldexp(1.0, level);
    const double s = std::round(v * scale) / scale;
    if (s == v) return std::nullopt;
    return s;
}

// Replaces each coordinate of the worst tuple by the coarsest dyadic rational
// (denominator 2^1 .. 2^30) that still violates the property by more than
// tol, sweeping until nothing changes.
template <class B, class P, class Defect>
double simplify_witness([[maybe_unused]] const B& b, std::vector<P>& points, std::vector<double>& params, double tol,
                        Defect&& defect)
{
    auto eval = [&](const std::vector<P>& pts, const std::vector<double>& prm) {
        try {
            const double v = defect(pts, prm);
            return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
        } catch (const std::exception&) {
            return -std::numeric_limits<double>::infinity();
        }
    };
    double current = eval(points, params);
    constexpr int kMaxLevel = 30;
    for (int sweep = 0; sweep < 8; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < params.size(); ++i) {
            for (int level = 0; level <= kMaxLevel; ++level) {
                const auto s = snap_param(params[i], level);
                if (!s) break;
                auto trial = params;
                trial[i] = *s;
                const double v = eval(points, trial);
                if (v > tol) {
                    params = std::move(trial);
                    current = v;
                    changed = true;
                    break;
                }
            }
        }
        if constexpr (std::is_same_v<P, Point2>) {
            for (std::size_t j = 0; j < points.size(); ++j) {
                for (int level = 0; level <= kMaxLevel; ++level) {
                    const double scale = std::ldexp(1.0, level);
                    const Point2 snapped{std::round(points[j].x * scale) / scale,
                                         std::round(points[j].y * scale) / scale};
                    if (snapped == points[j]) break;
                    if (!b.in_domain(snapped, 0.0)) continue;
                    auto trial = points;
                    trial[j] = snapped;
                    const double v = eval(trial, params);
                    if (v > tol) {
                        points = std::move(trial);
                        current = v;
                        changed = true;
                        break;
                    }
                }
            }
        }
        if (!changed) break;
    }
    return current;
}

template <class B, class P, class Defect>
PropertyReport finish(const B& b, const SampleConfig& cfg, Property property, Tracker<P>& tracker,
                      std::vector<std::string> param_names, Defect&& defect)
{
    PropertyReport r;
    r.property = property;
    r.bicombing = b.name();
    r.tol = cfg.tol;
    r.seed = cfg.seed;
    r.samples_evaluated = tracker.evaluated;
    r.worst_violation = tracker.worst;
    r.passed = tracker.worst <= cfg.tol;
    if (!r.passed && tracker.has) {
        Witness w;
        w.violation = simplify_witness(b, tracker.points, tracker.params, cfg.tol, defect);
        for (const P& p : tracker.points) w.points.push_back(coordinates(p));
        w.param_names = std::move(param_names);
        w.params = tracker.params;
        r.witness = std::move(w);
    }
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Property checks. Each samples cfg.tuples point tuples from the bicombing's
// domain (seeded by cfg.seed), sweeps the t-grid, and reports the largest
// defect. Failures are reports, not errors.
// ---------------------------------------------------------------------------

template <class B>
PropertyReport check_geodesic(const B& b, const SampleConfig& cfg)
{
    using P = typename B::point_type;
    cfg.validate();
    const auto grid = cfg.grid();
    const auto pts = b.sample(derive_seed(cfg.seed, 1), 2 * cfg.tuples);
    detail::Tracker<P> tracker;
    std::vector<P> path;
    for (std::size_t k = 0; k < cfg.tuples; ++k) {
        const P& p = pts[2 * k];
        const P& q = pts[2 * k + 1];
        path.clear();
        for (double t : grid) path.push_back(b(p, q, t));
        const double d = b.distance(p, q);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (std::size_t j = i + 1; j < grid.size(); ++j) {
                double v = std::abs(b.distance(path[i], path[j]) - (grid[j] - grid[i]) * d);
                if (i == 0) v = std::max(v, b.distance(path[0], p));
                if (j + 1 == grid.size()) v = std::max(v, b.distance(path[j], q));
                tracker.offer(v, {grid[i], grid[j]}, {&p, &q});
            }
        }
    }
    return detail::finish(b, cfg, Property::geodesic, tracker, {"s", "t"},
                          [&](const std::vector<P>& x, const std::vector<double>& prm) {
                              if (!(prm[0] <= prm[1])) throw std::invalid_argument("s > t");
                              return geodesic_defect(b, x[0], x[1], prm[0], prm[1]);
                          });
}

template <class B>
PropertyReport check_conical(const B& b, const SampleConfig& cfg)
{
    using P = typename B::point_type;
    cfg.validate();
    const auto grid = cfg.grid();
    const auto pts = b.sample(derive_seed(cfg.seed, 1), 4 * cfg.tuples);
    detail::Tracker<P> tracker;
    for (std::size_t k = 0; k < cfg.tuples; ++k) {
        const P* x = &pts[4 * k];
        for (double t : grid)
            tracker.offer(conical_defect(b, x[0], x[1], x[2], x[3], t), {t}, {&x[0], &x[1], &x[2], &x[3]});
    }
    return detail::finish(b, cfg, Property::conical, tracker, {"t"},
                          [&](const std::vector<P>& x, const std::vector<double>& prm) {
                              return conical_defect(b, x[0], x[1], x[2], x[3], prm[0]);
                          });
}

template <class B>
PropertyReport check_convex(const B& b, const SampleConfig& cfg, std::span<const double> steps = kConvexSteps)
{
    using P = typename B::point_type;
    cfg.validate();
    if (steps.empty()) throw std::invalid_argument("check_convex: need at least one step");
    const auto grid = cfg.grid();
    const auto pts = b.sample(derive_seed(cfg.seed, 1), 4 * cfg.tuples);
    detail::Tracker<P> tracker;
    std::vector<double> f;
    for (std::size_t k = 0; k < cfg.tuples; ++k) {
        const P* x = &pts[4 * k];
        auto dist_at = [&](double s) { return b.distance(b(x[0], x[1], s), b(x[2], x[3], s)); };
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
            const double t = grid[i];
            const double ft = dist_at(t);
            for (double step : steps) {
                if (!(step > 0.0 && t - step >= 0.0 && t + step <= 1.0)) continue;
                const double v = 2.0 * ft - dist_at(t - step) - dist_at(t + step);
                tracker.offer(v, {t, step}, {&x[0], &x[1], &x[2], &x[3]});
            }
        }
    }
    return detail::finish(b, cfg, Property::convex, tracker, {"t", "step"},
                          [&](const std::vector<P>& x, const std::vector<double>& prm) {
                              return convex_defect(b, x[0], x[1], x[2], x[3], prm[0], prm[1]);
                          });
}

template <class B>
PropertyReport check_consistent(const B& b, const SampleConfig& cfg)
{
    using P = typename B::point_type;
    cfg.validate();
    const auto grid = cfg.grid();
    const auto pts = b.sample(derive_seed(cfg.seed, 1), 2 * cfg.tuples);
    Rng rng(derive_seed(cfg.seed, 2));
    detail::Tracker<P> tracker;
    for (std::size_t k = 0; k < cfg.tuples; ++k) {
        const P& p = pts[2 * k];
        const P& q = pts[2 * k + 1];
        std::size_t i = rng.below(grid.size());
        std::size_t j = rng.below(grid.size());
        if (i > j) std::swap(i, j);
        const double s1 = grid[i];
        const double s2 = grid[j];
        const P a = b(p, q, s1);
        const P c = b(p, q, s2);
        for (double u : grid) {
            const double v = b.distance(b(a, c, u), b(p, q, (1.0 - u) * s1 + u * s2));
            tracker.offer(v, {s1, s2, u}, {&p, &q});
        }
    }
    return detail::finish(b, cfg, Property::consistent, tracker, {"s1", "s2", "u"},
                          [&](const std::vector<P>& x, const std::vector<double>& prm) {
                              return consistency_defect(b, x[0], x[1], prm[0], prm[1], prm[2]);
                          });
}

template <class B>
PropertyReport check_reversible(const B& b, const SampleConfig& cfg)
{
    using P = typename B::point_type;
    cfg.validate();
    const auto grid = cfg.grid();
    const auto pts = b.sample(derive_seed(cfg.seed, 1), 2 * cfg.tuples);
    detail::Tracker<P> tracker;
    for (std::size_t k = 0; k < cfg.tuples; ++k) {
        const P& p = pts[2 * k];
        const P& q = pts[2 * k + 1];
        for (double t : grid) tracker.offer(reversibility_defect(b, p, q, t), {t}, {&p, &q});
    }
    return detail::finish(b, cfg, Property::reversible, tracker, {"t"},
                          [&](const std::vector<P>& x, const std::vector<double>& prm) {
                              return reversibility_defect(b, x[0], x[1], prm[0]);
                          });
}

template <class B>
PropertyReport check_midpoint_property(const B& b, const SampleConfig& cfg)
{
    using P = typename B::point_type;
    cfg.validate();
    const auto pts = b.sample(derive_seed(cfg.seed, 1), 2 * cfg.tuples);
    detail::Tracker<P> tracker;
    for (std::size_t k = 0; k < cfg.tuples; ++k)
        tracker.offer(midpoint_property_defect(b, pts[2 * k], pts[2 * k + 1]), {}, {&pts[2 * k], &pts[2 * k + 1]});
    return detail::finish(b, cfg, Property::midpoint_property, tracker, {},
                          [&](const std::vector<P>& x, const std::vector<double>&) {
                              return midpoint_property_defect(b, x[0], x[1]);
                          });
}

/// Runs the property `property` (anything but `linear`) on b.
template <class B>
PropertyReport check_property(const B& b, Property property, const SampleConfig& cfg)
{
    switch (property) {
    case Property::geodesic: return check_geodesic(b, cfg);
    case Property::conical: return check_conical(b, cfg);
    case Property::convex: return check_convex(b, cfg);
    case Property::consistent: return check_consistent(b, cfg);
    case Property::reversible: return check_reversible(b, cfg);
    case Property::midpoint_property: return check_midpoint_property(b, cfg);
    case Property::linear: break;
    }
    throw std::invalid_argument("check_property: local linearity needs a ball; use check_local_linearity");
}

/// Checks that b(p, q, t) = (1 - t) p + t q for p, q in the ball of radius r
/// about center (in b's norm). Requires the ball of radius 2r to lie in the
/// domain, verified on 720 points of its boundary; throws std::domain_error
/// otherwise.
PropertyReport check_local_linearity(const Bicombing& b, Point2 center, double r, const SampleConfig& cfg);

/// Pairs (stronger, weaker) where a pass of the first must imply a pass of the
/// second: consistent => convex => conical => geodesic, and reversible =>
/// midpoint property.
struct ImplicationViolation {
    std::string bicombing;
    Property stronger;
    Property weaker;
};

std::vector<ImplicationViolation> implication_violations(std::span<const PropertyReport> reports);

// ---------------------------------------------------------------------------
// Metric midpoint sets.
// ---------------------------------------------------------------------------

struct MidsetCluster {
    Point2 representative;  ///< member with the smallest residual
    double residual = 0.0;
    Point2 lo, hi;          ///< bounding box of the members
    std::vector<Point2> members;
};

/// Numerical picture of M_t(p, q) = {z : |z - p| = t |p - q|, |z - q| = (1 - t) |p - q|}.
///
/// Scans a resolution x resolution grid over the bounding box of the two
/// spheres, keeps grid points whose residuals are within tol plus one grid
/// step, refines each by step-halving pattern search down to tol / 10, keeps
/// refined points with both residuals <= tol, and groups them into
/// components by grid adjacency of their refined positions.
std::vector<MidsetCluster> mt_set(SpaceId space, Point2 p, Point2 q, double t, std::size_t resolution,
                                  double tol);

// ---------------------------------------------------------------------------
// Closing bounds of the convexity estimates for the antenna bicombings.
// ---------------------------------------------------------------------------

struct ThresholdValue {
    std::string label;
    double value = 0.0;
    bool positive = false;
};

/// Evaluates (4 - 144d - 640d^2) / (1 - 4d), 3 - 96d - 576d^2,
/// 31/8 - 96d - 576d^2, 255/64 - 96d - 576d^2 and 4 - 33d at d = delta.
/// Requires 0 <= delta < 1/4 (std::invalid_argument otherwise).
std::vector<ThresholdValue> delta_thresholds(double delta);

}  // namespace bicomb
