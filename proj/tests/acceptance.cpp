// Acceptance gate. Runs each criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Usage: acceptance [N ...] (default: all).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bicomb/funcspace.hpp"
#include "bicomb/midpoint.hpp"
#include "bicomb/suite.hpp"
#include "bicomb/verify.hpp"

using namespace bicomb;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Outcome matrix()
{
    SuiteSpec spec;
    spec.seed = 42;
    spec.tuples = 20000;
    spec.tol = 1e-9;
    spec.out_dir = std::filesystem::temp_directory_path() / "bicomb_acceptance_matrix";
    std::filesystem::remove_all(spec.out_dir);
    const auto start = std::chrono::steady_clock::now();
    const SuiteResult r = run_suite(spec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << r.entries.size() << " entries, " << r.deviations().size() << " deviations, " << num(secs) << " s";
    for (const MatrixEntry* e : r.deviations()) os << "; deviation " << e->suite << "/" << e->subject << "/" << e->check;
    return {r.exit_code() == 0 && secs < 60.0, os.str()};
}

Outcome golden_witness()
{
    const Point2 a = tau_X1({-1.5, 0.5}, {0, 0.5}, 5.0 / 12.0);
    const Point2 b = tau_X1({0, 0.5}, {-1.5, 0.5}, 7.0 / 12.0);
    const double err = std::max({std::abs(a.x + 7.0 / 8.0), std::abs(a.y - 1.0 / 8.0), std::abs(b.x + 7.0 / 8.0),
                                 std::abs(b.y - 1.0 / 48.0)});
    return {err <= 1e-12, "max coordinate error " + num(err)};
}

Outcome worked_pair()
{
    const Delta delta(1.0 / 64.0);
    const double d = delta.value();
    const Point2 p{-3, 0}, q{3, 0}, p2{-2, 0}, q2{2, 0};
    bool ok = true;
    std::ostringstream os;
    for (double tau : {0.01, 0.05, 0.1}) {
        const double formula = 4 * d * d + (1 - 72 * d * d) * tau * tau + 324 * d * d * std::pow(tau, 4);
        for (double t : {0.5 - tau, 0.5 + tau}) {
            const Point2 v = sigma_delta(delta, p, q, t) - sigma_delta(delta, p2, q2, t);
            const double gap2 = v.x * v.x + v.y * v.y;
            const double err = std::abs(gap2 - formula);
            if (!(err <= 1e-12)) ok = false;
            os << "t=" << num(t) << " computed " << num(gap2) << " formula " << num(formula) << "; ";
        }
    }
    return {ok, os.str()};
}

Outcome consistency_gap()
{
    const Point2 p{-3, 0}, q{3, 0};
    const Bicombing b = make_sigma_delta(Delta(1.0 / 64.0));
    SampleConfig cfg;
    cfg.tol = 1e-9;
    double at_witness = 0.0;
    for (double u : cfg.grid()) at_witness = std::max(at_witness, consistency_defect(b, p, q, 1.0 / 6.0, 5.0 / 6.0, u));
    const PropertyReport hot = check_consistent(b, cfg);
    const PropertyReport zero = check_consistent(make_sigma_delta(Delta(0.0)), cfg);
    const bool ok = !hot.passed && hot.worst_violation >= 1e-3 && at_witness >= 1e-3 && zero.passed;
    return {ok, "worst " + num(hot.worst_violation) + ", at witness " + num(at_witness) + ", delta=0 worst " +
                    num(zero.worst_violation)};
}

Outcome midpoint_convergence()
{
    const Bicombing b = make_sigma_X1();
    const auto pts = b.sample(42, 2000);
    std::size_t bad = 0;
    double worst_ratio = 0.0;
    for (std::size_t k = 0; k < 1000; ++k) {
        const auto trace = midpoint_trace(b, pts[2 * k], pts[2 * k + 1]);
        const double d = trace.gaps.front();
        for (std::size_t n = 0; n < trace.gaps.size(); ++n) {
            const double bound = std::ldexp(d, -static_cast<int>(n));
            if (bound > 0) worst_ratio = std::max(worst_ratio, trace.gaps[n] / bound);
            if (trace.gaps[n] > bound * (1.0 + 1e-9)) ++bad;
        }
    }
    const Bicombing rev = reversibilize(make_sigma_tilde_delta(Delta(1.0 / 64.0)), MidpointConfig{1e-10, 64});
    SampleConfig cfg;
    cfg.tol = 2e-10;
    const PropertyReport r = check_reversible(rev, cfg);
    return {bad == 0 && r.passed, std::to_string(bad) + " gap violations, max ratio " + num(worst_ratio) +
                                      "; rev(sigma_tilde) reversible worst " + num(r.worst_violation)};
}

Outcome rigidity()
{
    bool ok = true;
    std::ostringstream os;
    for (double t : {0.25, 0.5, 0.75}) {
        const auto c = mt_set(SpaceId::linf, {1, 1}, {-1, -1}, t, 2001, 1e-9);
        const Point2 want{1 - 2 * t, 1 - 2 * t};
        double err = c.size() == 1 ? 0.0 : INFINITY;
        if (c.size() == 1)
            for (const Point2& z : c[0].members) err = std::max(err, dist(SpaceId::linf, z, want));
        if (!(c.size() == 1 && err <= 1e-6)) ok = false;
        os << "t=" << t << ": " << c.size() << " cluster(s), err " << num(err) << "; ";
    }
    const auto seg = mt_set(SpaceId::linf, {1, 0}, {-1, 0}, 0.5, 2001, 1e-9);
    if (seg.size() == 1) {
        const auto& s = seg[0];
        const double xerr = std::max(std::abs(s.lo.x), std::abs(s.hi.x));
        const bool span = s.lo.y <= -1.0 + 1e-6 && s.hi.y >= 1.0 - 1e-6;
        if (!(span && xerr <= 1e-6)) ok = false;
        os << "segment y in [" << num(s.lo.y) << ", " << num(s.hi.y) << "], |x| <= " << num(xerr);
    } else {
        ok = false;
        os << "segment: " << seg.size() << " clusters";
    }
    return {ok, os.str()};
}

Outcome function_space()
{
    const MonotoneFn rt = MonotoneFn::sqrt_graded(256);
    const MonotoneFn id = MonotoneFn::identity();
    const double t = 0.5;
    const MonotoneFn h = horizontal_bicombing(rt, id, t);
    const double err = max_pointwise_error(h, [t](double x) { return sqrt_identity_horizontal(x, t); });
    const double gap = l1_distance(vertical_bicombing(rt, id, t), h);
    const auto fns = sample_monotone_fns(derive_seed(42, 3), 2000);
    double iso = 0.0;
    for (std::size_t k = 0; k < 1000; ++k) {
        const double d = l1_distance(fns[2 * k], fns[2 * k + 1]);
        iso = std::max(iso, std::abs(l1_distance(invert(fns[2 * k]), invert(fns[2 * k + 1])) - d));
    }
    return {err <= 5e-4 && gap > 1e-2 && iso <= 1e-12,
            "closed-form error " + num(err) + ", vertical/horizontal distance " + num(gap) + ", isometry error " +
                num(iso)};
}

Outcome thresholds()
{
    bool ok = true;
    std::ostringstream os;
    const auto check_values = [&](double d) {
        const auto v = delta_thresholds(d);
        const double direct[] = {(4 - 144 * d - 640 * d * d) / (1 - 4 * d), 3 - 96 * d - 576 * d * d,
                                 31.0 / 8.0 - 96 * d - 576 * d * d, 255.0 / 64.0 - 96 * d - 576 * d * d, 4 - 33 * d};
        for (std::size_t i = 0; i < 5; ++i)
            if (!(std::abs(v[i].value - direct[i]) <= 1e-15)) ok = false;
        return v;
    };
    const auto low = check_values(1.0 / 64.0);
    for (const auto& v : low) {
        if (!v.positive) ok = false;
        os << v.label << "=" << num(v.value) << " ";
    }
    const auto high = check_values(0.03);
    const bool negative = high[1].label == "3-96d-576d^2" && !high[1].positive;
    if (!negative) ok = false;
    os << "; at 0.03 " << high[1].label << "=" << num(high[1].value);
    return {ok, os.str()};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {"pass/fail matrix", matrix},
    {"golden witness of tau_X1", golden_witness},
    {"worked convexity gap at 1/2 +- tau", worked_pair},
    {"non-consistency gap", consistency_gap},
    {"midpoint convergence and reversibilization", midpoint_convergence},
    {"rigidity of midpoint sets", rigidity},
    {"function space bicombings", function_space},
    {"closing thresholds", thresholds},
};

}  // namespace

int main(int argc, char** argv)
{
    std::vector<std::size_t> which;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > static_cast<int>(kCriteria.size())) {
            std::cerr << "acceptance: unknown criterion " << argv[i] << '\n';
            return 2;
        }
        which.push_back(static_cast<std::size_t>(n));
    }
    if (which.empty())
        for (std::size_t n = 1; n <= kCriteria.size(); ++n) which.push_back(n);

    int failed = 0;
    for (std::size_t n : which) {
        const auto& [label, run] = kCriteria[n - 1];
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << label << "): " << o.detail << '\n';
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
