#include "bicomb/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bicomb/number_format.hpp"
#include "bicomb/rng.hpp"

namespace bicomb {

namespace {

// Merged breakpoint abscissae of f and g with both functions evaluated there.
struct MergedGrid {
    std::vector<double> x, f, g;
};

MergedGrid merge(const MonotoneFn& f, const MonotoneFn& g)
{
    const auto a = f.breakpoints();
    const auto b = g.breakpoints();
    MergedGrid m;
    m.x.reserve(a.size() + b.size());
    m.f.reserve(a.size() + b.size());
    m.g.reserve(a.size() + b.size());

    // Linear interpolation on the segment of `s` that contains x, where s[i].x <= x <= s[i+1].x.
    auto interp = [](std::span<const Breakpoint> s, std::size_t i, double x) {
        const Breakpoint& lo = s[i - 1];
        const Breakpoint& hi = s[i];
        return lo.v + (hi.v - lo.v) * ((x - lo.x) / (hi.x - lo.x));
    };

    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].x == b[j].x) {
            m.x.push_back(a[i].x);
            m.f.push_back(a[i].v);
            m.g.push_back(b[j].v);
            ++i;
            ++j;
        } else if (a[i].x < b[j].x) {
            m.x.push_back(a[i].x);
            m.f.push_back(a[i].v);
            m.g.push_back(interp(b, j, a[i].x));
            ++i;
        } else {
            m.x.push_back(b[j].x);
            m.f.push_back(interp(a, i, b[j].x));
            m.g.push_back(b[j].v);
            ++j;
        }
    }
    return m;
}

// Integral over [0, h] of |d| for d linear from d0 to d1.
double abs_linear_integral(double d0, double d1, double h)
{
    if ((d0 >= 0.0 && d1 >= 0.0) || (d0 <= 0.0 && d1 <= 0.0)) return 0.5 * h * std::abs(d0 + d1);
    // Sign change at h * |d0| / (|d0| + |d1|): two triangles.
    return 0.5 * h * (d0 * d0 + d1 * d1) / (std::abs(d0) + std::abs(d1));
}

}  // namespace

MonotoneFn::MonotoneFn(std::vector<Breakpoint> breakpoints) : breakpoints_(std::move(breakpoints))
{
    if (breakpoints_.size() < 2) throw std::invalid_argument("MonotoneFn: need at least two breakpoints");
    if (breakpoints_.front() != Breakpoint{0.0, 0.0})
        throw std::invalid_argument("MonotoneFn: first breakpoint must be (0, 0)");
    if (breakpoints_.back() != Breakpoint{1.0, 1.0})
        throw std::invalid_argument("MonotoneFn: last breakpoint must be (1, 1)");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i].x > breakpoints_[i - 1].x) || !(breakpoints_[i].v > breakpoints_[i - 1].v)) {
            std::ostringstream os;
            os << "MonotoneFn: breakpoints not strictly increasing at index " << i;
            throw std::invalid_argument(os.str());
        }
    }
}

MonotoneFn MonotoneFn::identity() { return MonotoneFn({{0.0, 0.0}, {1.0, 1.0}}); }

MonotoneFn MonotoneFn::sqrt_graded(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("sqrt_graded: n must be positive");
    std::vector<Breakpoint> bp(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n);
        bp[i] = {s * s, s};
    }
    return MonotoneFn(std::move(bp));
}

double MonotoneFn::operator()(double x) const { return eval_fn(*this, x); }

double eval_fn(const MonotoneFn& f, double x)
{
    const auto bp = f.breakpoints();
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const auto hi = std::upper_bound(bp.begin(), bp.end(), x,
                                     [](double value, const Breakpoint& b) { return value < b.x; });
    const auto lo = hi - 1;
    if (lo->x == x) return lo->v;
    return lo->v + (hi->v - lo->v) * ((x - lo->x) / (hi->x - lo->x));
}

double l1_distance(const MonotoneFn& f, const MonotoneFn& g)
{
    const MergedGrid m = merge(f, g);
    double total = 0.0;
    for (std::size_t k = 1; k < m.x.size(); ++k)
        total += abs_linear_integral(m.f[k - 1] - m.g[k - 1], m.f[k] - m.g[k], m.x[k] - m.x[k - 1]);
    return total;
}

MonotoneFn invert(const MonotoneFn& f)
{
    std::vector<Breakpoint> bp;
    bp.reserve(f.size());
    for (const Breakpoint& b : f.breakpoints()) bp.push_back({b.v, b.x});
    return MonotoneFn(std::move(bp));
}

MonotoneFn vertical_bicombing(const MonotoneFn& f, const MonotoneFn& g, double t)
{
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("vertical_bicombing: t must lie in [0, 1]");
    if (t == 0.0) return f;
    if (t == 1.0) return g;
    const MergedGrid m = merge(f, g);
    std::vector<Breakpoint> bp(m.x.size());
    for (std::size_t k = 0; k < m.x.size(); ++k) bp[k] = {m.x[k], (1.0 - t) * m.f[k] + t * m.g[k]};
    bp.front().v = 0.0;
    bp.back().v = 1.0;
    return MonotoneFn(std::move(bp));
}

MonotoneFn horizontal_bicombing(const MonotoneFn& f, const MonotoneFn& g, double t)
{
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("horizontal_bicombing: t must lie in [0, 1]");
    if (t == 0.0) return f;
    if (t == 1.0) return g;
    return invert(vertical_bicombing(invert(f), invert(g), t));
}

double sqrt_identity_horizontal(double x, double t)
{
    if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("sqrt_identity_horizontal: t must lie in [0, 1)");
    return (-t + std::sqrt(4.0 * (1.0 - t) * x + t * t)) / (2.0 * (1.0 - t));
}

MonotoneFn read_monotone_fn(std::istream& in)
{
    std::vector<Breakpoint> bp;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        fields.imbue(std::locale::classic());
        Breakpoint b;
        std::string extra;
        if (!(fields >> b.x >> b.v) || (fields >> extra))
            throw std::invalid_argument("read_monotone_fn: malformed line " + std::to_string(line_no));
        bp.push_back(b);
    }
    return MonotoneFn(std::move(bp));
}

void write_monotone_fn(std::ostream& out, const MonotoneFn& f)
{
    for (const Breakpoint& b : f.breakpoints()) out << format_double(b.x) << ' ' << format_double(b.v) << '\n';
}

std::vector<MonotoneFn> sample_monotone_fns(std::uint64_t seed, std::size_t count, std::size_t max_interior)
{
    Rng rng(seed);
    std::vector<MonotoneFn> out;
    out.reserve(count);
    std::vector<double> xs, vs;
    while (out.size() < count) {
        const std::size_t k = rng.below(max_interior + 1);
        xs.assign(k, 0.0);
        vs.assign(k, 0.0);
        for (double& x : xs) x = rng.uniform();
        for (double& v : vs) v = rng.uniform();
        std::sort(xs.begin(), xs.end());
        std::sort(vs.begin(), vs.end());
        std::vector<Breakpoint> bp{{0.0, 0.0}};
        bool ok = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(xs[i] > bp.back().x && vs[i] > bp.back().v)) {
                ok = false;
                break;
            }
            bp.push_back({xs[i], vs[i]});
        }
        if (!ok) continue;
        bp.push_back({1.0, 1.0});
        out.emplace_back(std::move(bp));
    }
    return out;
}

MonotoneFn FunctionBicombing::operator()(const MonotoneFn& f, const MonotoneFn& g, double t) const
{
    return kind_ == Kind::vertical ? vertical_bicombing(f, g, t) : horizontal_bicombing(f, g, t);
}

}  // namespace bicomb
