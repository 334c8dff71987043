#include "bicomb/figure.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bicomb/bicombing.hpp"
#include "bicomb/number_format.hpp"

namespace bicomb {

namespace {

using Curve = std::function<Point2(double)>;

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) { out_ << "series,t,x,y\n"; }

    void row(std::string_view series, double t, Point2 p)
    {
        out_ << series << ',' << format_double(t) << ',' << format_double(p.x) << ',' << format_double(p.y) << '\n';
    }

    // Samples curve at kFigureSamples values of t evenly spread over [lo, hi].
    void series(std::string_view name, const Curve& curve, double lo = 0.0, double hi = 1.0)
    {
        for (int k = 0; k < kFigureSamples; ++k) {
            const double s = static_cast<double>(k) / (kFigureSamples - 1);
            const double t = k == kFigureSamples - 1 ? hi : lo + (hi - lo) * s;
            row(name, t, curve(t));
        }
    }

    void segment(std::string_view name, Point2 a, Point2 b)
    {
        series(name, [=](double t) { return lerp(a, b, t); });
    }

private:
    std::ostream& out_;
};

void antenna_boundary(CsvWriter& csv)
{
    csv.segment("boundary_X_minus", {-3.0, 0.0}, {-1.0, 0.0});
    csv.segment("boundary_X_zero_bottom", {-1.0, 0.0}, {1.0, 0.0});
    csv.series("boundary_X_zero_top", [](double t) {
        const double x = -1.0 + 2.0 * t;
        return Point2{x, (1.0 - x * x) / 32.0};
    });
    csv.segment("boundary_X_plus", {1.0, 0.0}, {3.0, 0.0});
}

void diamond_boundary(CsvWriter& csv)
{
    csv.segment("boundary_diamond_1", {1.0, 0.0}, {0.0, 1.0});
    csv.segment("boundary_diamond_2", {0.0, 1.0}, {-1.0, 0.0});
    csv.segment("boundary_diamond_3", {-1.0, 0.0}, {0.0, -1.0});
    csv.segment("boundary_diamond_4", {0.0, -1.0}, {1.0, 0.0});
    csv.segment("boundary_X1_antenna", {-1.0, 0.0}, {-2.0, 1.0});
    csv.segment("boundary_X2_antenna", {-1.0, 0.0}, {-2.0, -1.0});
}

}  // namespace

std::string_view to_string(FigureName name)
{
    switch (name) {
    case FigureName::space_X_with_geodesic: return "space_X_with_geodesic";
    case FigureName::convexity_pair: return "convexity_pair";
    case FigureName::folded_X1: return "folded_X1";
    case FigureName::midpoint_X1: return "midpoint_X1";
    }
    return "unknown";
}

FigureName figure_from_string(std::string_view name)
{
    for (FigureName f : {FigureName::space_X_with_geodesic, FigureName::convexity_pair, FigureName::folded_X1,
                         FigureName::midpoint_X1})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown figure: " + std::string(name));
}

void write_figure(std::ostream& out, FigureName name, double delta)
{
    const Delta d(delta);
    CsvWriter csv(out);
    switch (name) {
    case FigureName::space_X_with_geodesic: {
        antenna_boundary(csv);
        const Point2 p{-3.0, 0.0}, q{3.0, 0.0};
        csv.series("sigma_pq", [&](double t) { return sigma_delta(d, p, q, t); });
        break;
    }
    case FigureName::convexity_pair: {
        antenna_boundary(csv);
        const Point2 p{-3.0, 0.0}, q{3.0, 0.0}, p2{-2.0, 0.0}, q2{2.0, 0.0};
        csv.series("sigma_pq", [&](double t) { return sigma_delta(d, p, q, t); });
        csv.series("sigma_p'q'", [&](double t) { return sigma_delta(d, p2, q2, t); });
        csv.series("distance", [&](double t) {
            return Point2{t, dist(SpaceId::hybrid, sigma_delta(d, p, q, t), sigma_delta(d, p2, q2, t))};
        });
        break;
    }
    case FigureName::folded_X1: {
        diamond_boundary(csv);
        const Point2 p{-2.0, 1.0}, q{-0.3, 0.15};
        csv.series("sigma_pq", [&](double t) { return sigma_X1(p, q, t); });
        csv.series("f_inv_sigma_qp", [&](double t) { return fold_f(sigma_X1(q, p, t), FoldDirection::inverse); });
        break;
    }
    case FigureName::midpoint_X1: {
        diamond_boundary(csv);
        const Point2 p{-1.5, 0.5}, q{0.0, 0.5};
        csv.series("tau_pq", [&](double t) { return tau_X1(p, q, t); }, 0.0, 0.5);
        csv.series("f_inv_tau_qp", [&](double t) { return fold_f(tau_X1(q, p, t), FoldDirection::inverse); }, 0.5,
                   1.0);
        csv.row("m", 0.5, 0.5 * (sigma_X1(p, q, 0.5) + sigma_X1(q, p, 0.5)));
        break;
    }
    }
}

void export_figure(FigureName name, double delta, const std::filesystem::path& out)
{
    std::ostringstream buffer;
    write_figure(buffer, name, delta);
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + out.string() + " for writing");
    f << buffer.str();
    f.close();
    if (!f) throw std::runtime_error("failed writing " + out.string());
}

}  // namespace bicomb
