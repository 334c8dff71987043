#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bicomb {

struct Breakpoint {
    double x = 0.0;
    double v = 0.0;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// A continuous, strictly increasing map of [0, 1] onto itself, stored as the
/// breakpoints of a piecewise-linear interpolant.
///
/// Invariants: the first breakpoint is (0, 0), the last is (1, 1), and both
/// coordinates increase strictly. The constructor throws
/// std::invalid_argument otherwise.
class MonotoneFn {
public:
    explicit MonotoneFn(std::vector<Breakpoint> breakpoints);

    static MonotoneFn identity();

    /// Interpolant of sqrt on the graded mesh x_i = (i/n)^2, so that the
    /// inverse is the interpolant of x^2 on the uniform mesh i/n.
    static MonotoneFn sqrt_graded(std::size_t n = 256);

    double operator()(double x) const;

    std::span<const Breakpoint> breakpoints() const { return breakpoints_; }
    std::size_t size() const { return breakpoints_.size(); }

    friend bool operator==(const MonotoneFn&, const MonotoneFn&) = default;

private:
    std::vector<Breakpoint> breakpoints_;
};

/// Piecewise-linear interpolation at x in [0, 1].
double eval_fn(const MonotoneFn& f, double x);

/// Exact L1 distance of two interpolants: integrates |f - g| piece by piece on
/// the merged breakpoint grid, splitting pieces where the sign changes.
double l1_distance(const MonotoneFn& f, const MonotoneFn& g);

/// Inverse function (coordinate swap of the breakpoints). An L1 isometry.
MonotoneFn invert(const MonotoneFn& f);

/// Pointwise combination (1 - t) f + t g.
MonotoneFn vertical_bicombing(const MonotoneFn& f, const MonotoneFn& g, double t);

/// Horizontal interpolation: invert((1 - t) invert(f) + t invert(g)).
MonotoneFn horizontal_bicombing(const MonotoneFn& f, const MonotoneFn& g, double t);

/// Closed form of horizontal_bicombing(sqrt, identity, t) at x, for t < 1.
double sqrt_identity_horizontal(double x, double t);

/// Largest |f(x) - reference(x)| over the breakpoints of f and `samples`
/// equally spaced points of [0, 1].
template <class F>
double max_pointwise_error(const MonotoneFn& f, F&& reference, std::size_t samples = 10001)
{
    double worst = 0.0;
    auto visit = [&](double x) {
        const double e = f(x) - reference(x);
        worst = std::max(worst, e < 0.0 ? -e : e);
    };
    for (const Breakpoint& b : f.breakpoints()) visit(b.x);
    for (std::size_t i = 0; i < samples; ++i)
        visit(static_cast<double>(i) / static_cast<double>(samples - 1));
    return worst;
}

/// Two-column text format: one "x v" pair per line, increasing in both
/// columns, starting with "0 0" and ending with "1 1". Blank lines and lines
/// starting with '#' are ignored on input.
MonotoneFn read_monotone_fn(std::istream& in);
void write_monotone_fn(std::ostream& out, const MonotoneFn& f);

/// Random interpolants with up to `max_interior` interior breakpoints.
std::vector<MonotoneFn> sample_monotone_fns(std::uint64_t seed, std::size_t count,
                                            std::size_t max_interior = 6);

/// Either of the two bicombings of the function space, in the shape the
/// property checks and the midpoint iteration expect.
class FunctionBicombing {
public:
    using point_type = MonotoneFn;
    enum class Kind { vertical, horizontal };

    explicit FunctionBicombing(Kind kind) : kind_(kind) {}

    MonotoneFn operator()(const MonotoneFn& f, const MonotoneFn& g, double t) const;
    double distance(const MonotoneFn& f, const MonotoneFn& g) const { return l1_distance(f, g); }
    std::vector<MonotoneFn> sample(std::uint64_t seed, std::size_t count) const
    {
        return sample_monotone_fns(seed, count);
    }
    std::string name() const { return kind_ == Kind::vertical ? "funcspace_vertical" : "funcspace_horizontal"; }
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace bicomb
