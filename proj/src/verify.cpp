#include "bicomb/verify.hpp"

#include <map>
#include <numbers>
#include <sstream>

namespace bicomb {

std::string_view to_string(Property property)
{
    switch (property) {
    case Property::geodesic: return "geodesic";
    case Property::conical: return "conical";
    case Property::convex: return "convex";
    case Property::consistent: return "consistent";
    case Property::reversible: return "reversible";
    case Property::midpoint_property: return "midpoint_property";
    case Property::linear: return "linear";
    }
    return "unknown";
}

Property property_from_string(std::string_view name)
{
    for (Property p : {Property::geodesic, Property::conical, Property::convex, Property::consistent,
                       Property::reversible, Property::midpoint_property, Property::linear}) {
        if (to_string(p) == name) return p;
    }
    throw std::invalid_argument("unknown property: " + std::string(name));
}

void SampleConfig::validate() const
{
    if (tuples < 1) throw std::invalid_argument("SampleConfig: tuples must be >= 1");
    if (t_grid < 3) throw std::invalid_argument("SampleConfig: t_grid must be >= 3");
    if (!(tol > 0.0)) throw std::invalid_argument("SampleConfig: tol must be > 0");
}

std::vector<double> SampleConfig::grid() const
{
    std::vector<double> g(t_grid);
    const double n = static_cast<double>(t_grid - 1);
    for (std::size_t k = 0; k < t_grid; ++k) g[k] = static_cast<double>(k) / n;
    return g;
}

double linearity_defect(const Bicombing& b, Point2 p, Point2 q, double t)
{
    return b.distance(b(p, q, t), lerp(p, q, t));
}

PropertyReport check_local_linearity(const Bicombing& b, Point2 center, double r, const SampleConfig& cfg)
{
    cfg.validate();
    if (!(r >= 0.0)) throw std::invalid_argument("check_local_linearity: radius must be >= 0");

    // B_{2r}(center) must lie in the domain; probe the center and the boundary sphere.
    constexpr int kDirections = 720;
    auto require = [&](Point2 z) {
        if (!b.in_domain(z)) {
            std::ostringstream os;
            os << "check_local_linearity: ball of radius " << 2.0 * r << " about " << center
               << " leaves the domain of " << b.name() << " at " << z;
            throw std::domain_error(os.str());
        }
    };
    require(center);
    for (int k = 0; k < kDirections; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / kDirections;
        const Point2 u{std::cos(angle), std::sin(angle)};
        require(center + (2.0 * r / norm(b.space(), u)) * u);
    }

    const auto grid = cfg.grid();
    const auto pts = sample_region(Region::ball(center, r, b.space()), derive_seed(cfg.seed, 1), 2 * cfg.tuples);
    detail::Tracker<Point2> tracker;
    for (std::size_t k = 0; k < cfg.tuples; ++k) {
        const Point2& p = pts[2 * k];
        const Point2& q = pts[2 * k + 1];
        for (double t : grid) tracker.offer(linearity_defect(b, p, q, t), {t}, {&p, &q});
    }
    return detail::finish(b, cfg, Property::linear, tracker, {"t"},
                          [&](const std::vector<Point2>& x, const std::vector<double>& prm) {
                              return linearity_defect(b, x[0], x[1], prm[0]);
                          });
}

std::vector<ImplicationViolation> implication_violations(std::span<const PropertyReport> reports)
{
    std::map<std::string, std::map<Property, bool>> passed;
    for (const PropertyReport& r : reports) passed[r.bicombing][r.property] = r.passed;

    std::vector<ImplicationViolation> out;
    for (const auto& [name, results] : passed) {
        auto has = [&](Property p) { return results.count(p) > 0; };
        auto ok = [&](Property p) { return results.at(p); };
        auto check = [&](Property stronger, Property weaker, bool premise) {
            if (has(stronger) && has(weaker) && premise && ok(stronger) && !ok(weaker))
                out.push_back({name, stronger, weaker});
        };
        // Consistency only forces convexity together with the conical inequality.
        const bool conical_ok = !has(Property::conical) || ok(Property::conical);
        check(Property::consistent, Property::convex, conical_ok);
        check(Property::convex, Property::conical, true);
        check(Property::reversible, Property::midpoint_property, true);
    }
    return out;
}

std::vector<ThresholdValue> delta_thresholds(double delta)
{
    if (!(delta >= 0.0 && delta < 0.25))
        throw std::invalid_argument("delta_thresholds: delta must lie in [0, 1/4)");
    const double d = delta;
    const double quad = 96.0 * d + 576.0 * d * d;
    std::vector<ThresholdValue> out{
        {"(4-144d-640d^2)/(1-4d)", (4.0 - 144.0 * d - 640.0 * d * d) / (1.0 - 4.0 * d), false},
        {"3-96d-576d^2", 3.0 - quad, false},
        {"31/8-96d-576d^2", 31.0 / 8.0 - quad, false},
        {"255/64-96d-576d^2", 255.0 / 64.0 - quad, false},
        {"4-33d", 4.0 - 33.0 * d, false},
    };
    for (ThresholdValue& v : out) v.positive = v.value > 0.0;
    return out;
}

}  // namespace bicomb
