#include "bicomb/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "bicomb/midpoint.hpp"
#include "bicomb/number_format.hpp"
#include "bicomb/report.hpp"

namespace bicomb {

namespace {

using Task = std::function<MatrixEntry()>;

constexpr std::size_t kReversibilizeTupleCap = 2000;
constexpr std::size_t kContractionPairs = 1000;
constexpr double kGoldenTol = 1e-12;

std::string fmt(double v) { return format_double(v); }

Expect expect_if(bool pass) { return pass ? Expect::pass : Expect::fail; }

SampleConfig sample_config(const SuiteSpec& spec, std::size_t cap = std::numeric_limits<std::size_t>::max())
{
    SampleConfig cfg;
    cfg.seed = spec.seed;
    cfg.tuples = std::min(spec.tuples, cap);
    cfg.tol = spec.tol;
    return cfg;
}

MatrixEntry from_report(PropertyReport report, Expect expected)
{
    MatrixEntry e;
    e.subject = report.bicombing;
    e.check = std::string(to_string(report.property));
    e.expected = expected;
    e.passed = report.passed;
    e.value = report.worst_violation;
    e.note = "worst violation <= " + fmt(report.tol);
    e.report = std::move(report);
    return e;
}

MatrixEntry measured(std::string subject, std::string check, Expect expected, double value, bool passed,
                     std::string note)
{
    MatrixEntry e;
    e.subject = std::move(subject);
    e.check = std::move(check);
    e.expected = expected;
    e.value = value;
    e.passed = passed;
    e.note = std::move(note);
    return e;
}

template <class B>
Task property_task(B b, Property property, SampleConfig cfg, Expect expected)
{
    return [b = std::move(b), property, cfg, expected] {
        return from_report(check_property(b, property, cfg), expected);
    };
}

Task linearity_task(Bicombing b, Point2 center, double r, SampleConfig cfg)
{
    return [b = std::move(b), center, r, cfg] {
        MatrixEntry e = from_report(check_local_linearity(b, center, r, cfg), Expect::pass);
        std::ostringstream os;
        os << "linear on ball " << center << " r=" << fmt(r);
        e.check = os.str();
        return e;
    };
}

// --- individual suites -----------------------------------------------------

void antenna_tasks(const SuiteSpec& spec, bool tilde, std::vector<Task>& out)
{
    const Delta delta(spec.delta);
    const bool bent = spec.delta > 0.0;
    const Bicombing b = tilde ? make_sigma_tilde_delta(delta) : make_sigma_delta(delta);
    const SampleConfig cfg = sample_config(spec);

    out.push_back(property_task(b, Property::geodesic, cfg, Expect::pass));
    out.push_back(property_task(b, Property::conical, cfg, Expect::pass));
    out.push_back(property_task(b, Property::convex, cfg, Expect::pass));
    out.push_back(property_task(b, Property::consistent, cfg, expect_if(!bent)));
    out.push_back(property_task(b, Property::reversible, cfg, expect_if(!tilde || !bent)));
    out.push_back(property_task(b, Property::midpoint_property, cfg, expect_if(!tilde || !bent)));
    if (tilde) return;

    const double tol = spec.tol;
    out.push_back([b, tol, bent, grid = cfg.grid()] {
        const Point2 p{-3.0, 0.0}, q{3.0, 0.0};
        double worst = 0.0;
        for (double u : grid) worst = std::max(worst, consistency_defect(b, p, q, 1.0 / 6.0, 5.0 / 6.0, u));
        return measured(b.name(), "consistency at p=(-3,0) q=(3,0) s1=1/6 s2=5/6", expect_if(!bent), worst,
                        worst <= tol, "max over u of the defect <= " + fmt(tol));
    });
    out.push_back([b, tol] {
        const Point2 p{-3.0, 0.0}, q{3.0, 0.0}, p2{-2.0, 0.0}, q2{2.0, 0.0};
        double worst = -std::numeric_limits<double>::infinity();
        for (double step : kConvexSteps) worst = std::max(worst, convex_defect(b, p, q, p2, q2, 0.5, step));
        return measured(b.name(), "convexity of the pair (-3,0)(3,0) / (-2,0)(2,0) at t=1/2", Expect::pass, worst,
                        worst <= tol, "2f(1/2) - f(1/2-s) - f(1/2+s) <= " + fmt(tol));
    });
}

void x1_tasks(const SuiteSpec& spec, std::vector<Task>& out)
{
    const Bicombing b = make_sigma_X1();
    const SampleConfig cfg = sample_config(spec);
    out.push_back(property_task(b, Property::geodesic, cfg, Expect::pass));
    out.push_back(property_task(b, Property::conical, cfg, Expect::pass));
    out.push_back(property_task(b, Property::convex, cfg, Expect::any));
    out.push_back(property_task(b, Property::consistent, cfg, Expect::any));
    out.push_back(property_task(b, Property::reversible, cfg, Expect::fail));
    out.push_back(property_task(b, Property::midpoint_property, cfg, Expect::fail));
    out.push_back([b] {
        const double gap = reversibility_defect(b, Point2{-2.0, 1.0}, Point2{0.0, 0.0}, 0.75);
        return measured(b.name(), "reversibility gap at p=(-2,1) q=(0,0) t=3/4", Expect::pass, gap,
                        std::abs(gap - 0.5) <= kGoldenTol, "equals 1/2 within " + fmt(kGoldenTol));
    });
}

void tau_tasks(const SuiteSpec& spec, std::vector<Task>& out)
{
    const Bicombing b = make_tau_X1();
    const SampleConfig cfg = sample_config(spec);
    out.push_back(property_task(b, Property::geodesic, cfg, Expect::pass));
    out.push_back(property_task(b, Property::conical, cfg, Expect::pass));
    out.push_back(property_task(b, Property::convex, cfg, Expect::any));
    out.push_back(property_task(b, Property::consistent, cfg, Expect::any));
    out.push_back(property_task(b, Property::reversible, cfg, Expect::fail));
    out.push_back(property_task(b, Property::midpoint_property, cfg, Expect::pass));

    const Point2 p{-1.5, 0.5}, q{0.0, 0.5};
    auto golden = [b](Point2 from, Point2 to, double t, Point2 want, std::string label) {
        return [=] {
            const Point2 got = b(from, to, t);
            const double err = std::max(std::abs(got.x - want.x), std::abs(got.y - want.y));
            return measured(b.name(), label, Expect::pass, err, err <= kGoldenTol,
                            "coordinate error <= " + fmt(kGoldenTol));
        };
    };
    out.push_back(golden(p, q, 5.0 / 12.0, {-7.0 / 8.0, 1.0 / 8.0}, "tau((-3/2,1/2),(0,1/2),5/12) = (-7/8,1/8)"));
    out.push_back(golden(q, p, 7.0 / 12.0, {-7.0 / 8.0, 1.0 / 48.0}, "tau((0,1/2),(-3/2,1/2),7/12) = (-7/8,1/48)"));
    out.push_back(golden(p, q, 0.5, {-0.75, 0.125}, "tau((-3/2,1/2),(0,1/2),1/2) = (-3/4,1/8)"));
    out.push_back([b, p, q] {
        const double gap = reversibility_defect(b, p, q, 5.0 / 12.0);
        return measured(b.name(), "reversibility gap at p=(-3/2,1/2) q=(0,1/2) t=5/12", Expect::pass, gap,
                        std::abs(gap - 5.0 / 48.0) <= kGoldenTol, "equals 5/48 within " + fmt(kGoldenTol));
    });
}

void reversibilize_tasks(const SuiteSpec& spec, std::vector<Task>& out)
{
    const std::uint64_t seed = spec.seed;
    const std::size_t pairs = std::min(spec.tuples, kContractionPairs);
    out.push_back([seed, pairs] {
        const Bicombing base = make_sigma_X1();
        const auto pts = base.sample(derive_seed(seed, 1), 2 * pairs);
        double worst = 0.0;
        for (std::size_t k = 0; k < pairs; ++k) {
            const auto trace = midpoint_trace(base, pts[2 * k], pts[2 * k + 1]);
            const double d0 = trace.gaps.front();
            if (d0 == 0.0) continue;
            for (std::size_t n = 0; n < trace.gaps.size(); ++n)
                worst = std::max(worst, std::ldexp(trace.gaps[n], static_cast<int>(n)) / d0);
        }
        return measured(base.name(), "midpoint iteration gaps d(x_n,y_n) 2^n / d(x,y)", Expect::pass, worst,
                        worst <= 1.0 + 1e-9, "ratio <= 1 + 1e-9 over " + std::to_string(pairs) + " pairs");
    });

    MidpointConfig mcfg;
    mcfg.tol = std::min(mcfg.tol, spec.tol / 4.0);
    const SampleConfig cfg = sample_config(spec, kReversibilizeTupleCap);
    for (const Bicombing& base : {make_sigma_tilde_delta(Delta(spec.delta)), make_sigma_X1()}) {
        const Bicombing rev = reversibilize(base, mcfg);
        for (Property prop : {Property::geodesic, Property::conical, Property::reversible, Property::midpoint_property})
            out.push_back(property_task(rev, prop, cfg, Expect::pass));
    }
}

void funcspace_tasks(const SuiteSpec& spec, std::vector<Task>& out)
{
    const SampleConfig cfg = sample_config(spec);
    for (auto kind : {FunctionBicombing::Kind::vertical, FunctionBicombing::Kind::horizontal}) {
        const FunctionBicombing b(kind);
        for (Property prop : {Property::geodesic, Property::conical, Property::convex, Property::consistent,
                              Property::reversible, Property::midpoint_property})
            out.push_back(property_task(b, prop, cfg, Expect::pass));
    }

    out.push_back([] {
        const MonotoneFn f = MonotoneFn::sqrt_graded();
        const MonotoneFn g = MonotoneFn::identity();
        const double d = l1_distance(vertical_bicombing(f, g, 0.5), horizontal_bicombing(f, g, 0.5));
        return measured("funcspace", "L1(vertical, horizontal) for sqrt, id at t=1/2", Expect::pass, d, d > 1e-2,
                        "distance > 0.01");
    });
    out.push_back([] {
        const MonotoneFn h = horizontal_bicombing(MonotoneFn::sqrt_graded(), MonotoneFn::identity(), 0.5);
        const double err = max_pointwise_error(h, [](double x) { return sqrt_identity_horizontal(x, 0.5); });
        return measured("funcspace", "horizontal(sqrt, id, 1/2) against its closed form", Expect::pass, err,
                        err <= 5e-4, "max pointwise error <= 5e-4");
    });
    const std::uint64_t seed = spec.seed;
    out.push_back([seed] {
        const auto fns = sample_monotone_fns(derive_seed(seed, 3), 2 * kContractionPairs);
        double worst = 0.0;
        for (std::size_t k = 0; k < kContractionPairs; ++k) {
            const MonotoneFn& f = fns[2 * k];
            const MonotoneFn& g = fns[2 * k + 1];
            worst = std::max(worst, std::abs(l1_distance(f, g) - l1_distance(invert(f), invert(g))));
        }
        return measured("funcspace", "inversion is an L1 isometry", Expect::pass, worst, worst <= 1e-12,
                        "|d(f,g) - d(f^-1,g^-1)| <= 1e-12 over 1000 pairs");
    });
}

std::string describe_mt(SpaceId space, Point2 p, Point2 q, const std::string& t)
{
    std::ostringstream os;
    os << "M_" << t << " " << p << " " << q;
    return std::string(to_string(space)) + ":" + os.str();
}

void rigidity_tasks(const SuiteSpec& spec, std::vector<Task>& out)
{
    constexpr std::size_t kResolution = 2001;
    constexpr double kResidualTol = 1e-9;
    constexpr double kPositionTol = 1e-6;
    // Ends of a segment are only found up to the grid step (about 1.4e-3 for
    // the hybrid box at this resolution).
    constexpr double kSpanTol = 2e-3;

    auto singleton = [=](SpaceId space, Point2 p, Point2 q, double t, std::string tname) -> Task {
        return [=] {
            const auto clusters = mt_set(space, p, q, t, kResolution, kResidualTol);
            const Point2 want = lerp(p, q, t);
            // Where the spheres touch along a curved arc, a sideways offset e
            // costs only about e^2 / (2r) in residual.
            const double r = std::max(t, 1.0 - t) * dist(space, p, q);
            const double reach = kPositionTol + std::sqrt(2.0 * r * kResidualTol);
            double err = std::numeric_limits<double>::infinity();
            bool inside = false;
            if (clusters.size() == 1) {
                err = dist(SpaceId::linf, clusters.front().representative, want);
                inside = true;
                for (const Point2& z : clusters.front().members)
                    inside = inside && dist(SpaceId::linf, z, want) <= reach;
            }
            return measured(describe_mt(space, p, q, tname), "single point (1-t)p+tq", Expect::pass, err,
                            err <= kPositionTol && inside,
                            "one cluster, best member within " + fmt(kPositionTol) + " of the affine point, all within " +
                                fmt(reach));
        };
    };
    auto segment = [=](SpaceId space, Point2 p, Point2 q) -> Task {
        return [=] {
            const auto clusters = mt_set(space, p, q, 0.5, kResolution, kResidualTol);
            double err = std::numeric_limits<double>::infinity();
            if (clusters.size() == 1 && clusters.front().lo.y <= -1.0 + kSpanTol && clusters.front().hi.y >= 1.0 - kSpanTol) {
                err = 0.0;
                for (const Point2& z : clusters.front().members) err = std::max(err, std::abs(z.x));
            }
            return measured(describe_mt(space, p, q, "1/2"), "segment {0} x [-1,1]", Expect::pass, err,
                            err <= kPositionTol, "one cluster spanning y in [-1,1] up to " + fmt(kSpanTol) + " with |x| <= " + fmt(kPositionTol));
        };
    };

    const Point2 a{1.0, 1.0}, a2{-1.0, -1.0}, b{1.0, 0.0}, b2{-1.0, 0.0}, c{0.0, 1.0}, c2{0.0, -1.0};
    out.push_back(singleton(SpaceId::linf, a, a2, 0.25, "1/4"));
    out.push_back(singleton(SpaceId::linf, a, a2, 0.5, "1/2"));
    out.push_back(singleton(SpaceId::linf, a, a2, 0.75, "3/4"));
    out.push_back(segment(SpaceId::linf, b, b2));
    out.push_back(segment(SpaceId::hybrid, b, b2));
    out.push_back(singleton(SpaceId::hybrid, c, c2, 0.5, "1/2"));
    out.push_back(singleton(SpaceId::euclid, Point2{0.3, -1.2}, Point2{2.0, 0.7}, 0.3, "0.3"));

    const SampleConfig cfg = sample_config(spec);
    const Delta delta(spec.delta);
    out.push_back(linearity_task(make_sigma_delta(delta), {0.0, 1.0 / 64.0}, 0.004, cfg));
    out.push_back(linearity_task(make_linear(), {0.0, 0.0}, 1.0, cfg));
    out.push_back(linearity_task(make_sigma_X1(), {-0.25, 0.0}, 0.1, cfg));
    out.push_back(linearity_task(make_pushforward({5.0, 0.0}, make_sigma_delta(delta)), {5.0, 1.0 / 64.0}, 0.004, cfg));
}

void threshold_tasks(const SuiteSpec& spec, std::vector<Task>& out)
{
    const double delta = spec.delta;
    for (std::size_t i = 0; i < delta_thresholds(delta).size(); ++i) {
        out.push_back([delta, i] {
            const ThresholdValue v = delta_thresholds(delta)[i];
            return measured("delta=" + fmt(delta), v.label, Expect::pass, v.value, v.positive, "value > 0");
        });
    }
}

std::vector<Task> tasks_for(SuiteName name, const SuiteSpec& spec)
{
    std::vector<Task> out;
    switch (name) {
    case SuiteName::counterexample_sigma_delta: antenna_tasks(spec, false, out); break;
    case SuiteName::counterexample_sigma_tilde: antenna_tasks(spec, true, out); break;
    case SuiteName::counterexample_X1: x1_tasks(spec, out); break;
    case SuiteName::counterexample_tau_X1: tau_tasks(spec, out); break;
    case SuiteName::reversibilize_demo: reversibilize_tasks(spec, out); break;
    case SuiteName::funcspace_demo: funcspace_tasks(spec, out); break;
    case SuiteName::rigidity: rigidity_tasks(spec, out); break;
    case SuiteName::thresholds: threshold_tasks(spec, out); break;
    case SuiteName::all: break;
    }
    return out;
}

// Runs every task on a small pool; results keep task order.
std::vector<MatrixEntry> run_tasks(const std::vector<Task>& tasks)
{
    std::vector<MatrixEntry> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, tasks.size() ? tasks.size() : 1);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

MatrixEntry implication_entry(const std::vector<MatrixEntry>& entries)
{
    std::vector<PropertyReport> reports;
    for (const MatrixEntry& e : entries)
        if (e.report) reports.push_back(*e.report);
    const auto violations = implication_violations(reports);
    std::string note = "no bicombing passes a stronger check and fails a weaker one";
    for (const auto& v : violations)
        note += "; " + v.bicombing + ": " + std::string(to_string(v.stronger)) + " without "
              + std::string(to_string(v.weaker));
    return measured("all", "implication chain", Expect::pass, static_cast<double>(violations.size()),
                    violations.empty(), note);
}

std::string sanitize(std::string_view s)
{
    std::string out;
    for (char c : s) {
        const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-';
        if (keep)
            out.push_back(c);
        else if (out.empty() || out.back() != '_')
            out.push_back('_');
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

nlohmann::json entry_json(const MatrixEntry& e)
{
    nlohmann::json j = e.report ? to_json(*e.report) : nlohmann::json::object();
    j["suite"] = e.suite;
    j["subject"] = e.subject;
    j["check"] = e.check;
    j["expected"] = std::string(to_string(e.expected));
    j["passed"] = e.passed;
    j["value"] = e.value;
    j["note"] = e.note;
    j["matches_expected"] = e.matches();
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << text;
    f.close();
    if (!f) throw std::runtime_error("failed writing " + path.string());
}

void create_dirs(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

}  // namespace

std::string_view to_string(SuiteName name)
{
    switch (name) {
    case SuiteName::counterexample_sigma_delta: return "counterexample_sigma_delta";
    case SuiteName::counterexample_sigma_tilde: return "counterexample_sigma_tilde";
    case SuiteName::counterexample_X1: return "counterexample_X1";
    case SuiteName::counterexample_tau_X1: return "counterexample_tau_X1";
    case SuiteName::reversibilize_demo: return "reversibilize_demo";
    case SuiteName::funcspace_demo: return "funcspace_demo";
    case SuiteName::rigidity: return "rigidity";
    case SuiteName::thresholds: return "thresholds";
    case SuiteName::all: return "all";
    }
    return "unknown";
}

std::vector<SuiteName> concrete_suites()
{
    return {SuiteName::counterexample_sigma_delta, SuiteName::counterexample_sigma_tilde,
            SuiteName::counterexample_X1,          SuiteName::counterexample_tau_X1,
            SuiteName::reversibilize_demo,         SuiteName::funcspace_demo,
            SuiteName::rigidity,                   SuiteName::thresholds};
}

SuiteName suite_from_string(std::string_view name)
{
    for (SuiteName s : concrete_suites())
        if (to_string(s) == name) return s;
    if (name == "all") return SuiteName::all;
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::string_view to_string(Expect e)
{
    switch (e) {
    case Expect::pass: return "pass";
    case Expect::fail: return "fail";
    case Expect::any: return "any";
    }
    return "unknown";
}

void SuiteSpec::validate() const
{
    if (!(delta >= 0.0 && delta <= Delta::kMax))
        throw std::invalid_argument("delta must lie in [0, 1/64], got " + fmt(delta));
    if (tuples < 1) throw std::invalid_argument("tuples must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0, got " + fmt(tol));
}

std::vector<const MatrixEntry*> SuiteResult::deviations() const
{
    std::vector<const MatrixEntry*> out;
    for (const MatrixEntry& e : entries)
        if (!e.matches()) out.push_back(&e);
    return out;
}

SuiteResult run_suite(const SuiteSpec& spec)
{
    spec.validate();
    const std::vector<SuiteName> names =
        spec.name == SuiteName::all ? concrete_suites() : std::vector<SuiteName>{spec.name};

    std::vector<Task> tasks;
    std::vector<std::string> owner;
    for (SuiteName name : names) {
        for (Task& t : tasks_for(name, spec)) {
            tasks.push_back(std::move(t));
            owner.emplace_back(to_string(name));
        }
    }
    std::vector<MatrixEntry> entries = run_tasks(tasks);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i].suite = owner[i];

    SuiteResult result;
    for (SuiteName name : names) {
        const std::string suite(to_string(name));
        std::vector<MatrixEntry> mine;
        for (MatrixEntry& e : entries)
            if (e.suite == suite) mine.push_back(std::move(e));
        if (std::any_of(mine.begin(), mine.end(), [](const MatrixEntry& e) { return e.report.has_value(); })) {
            mine.push_back(implication_entry(mine));
            mine.back().suite = suite;
        }
        for (MatrixEntry& e : mine) result.entries.push_back(std::move(e));
    }

    create_dirs(spec.out_dir);
    std::set<std::filesystem::path> used;
    for (const MatrixEntry& e : result.entries) {
        const std::filesystem::path dir = spec.out_dir / e.suite;
        create_dirs(dir);
        const std::string stem = sanitize(e.subject) + "__" + sanitize(e.check);
        std::filesystem::path path = dir / (stem + ".json");
        for (int k = 2; used.count(path); ++k) path = dir / (stem + "_" + std::to_string(k) + ".json");
        used.insert(path);
        write_text(path, entry_json(e).dump(2) + "\n");
        result.files.push_back(path);
    }

    nlohmann::json summary;
    summary["spec"] = {{"suite", std::string(to_string(spec.name))}, {"delta", spec.delta}, {"seed", spec.seed},
                       {"tuples", spec.tuples}, {"tol", spec.tol}};
    summary["entries"] = nlohmann::json::array();
    for (const MatrixEntry& e : result.entries) {
        nlohmann::json j = entry_json(e);
        j.erase("witness");
        summary["entries"].push_back(std::move(j));
    }
    summary["deviations"] = nlohmann::json::array();
    for (const MatrixEntry* e : result.deviations())
        summary["deviations"].push_back(e->suite + "/" + e->subject + "/" + e->check);
    summary["exit_code"] = result.exit_code();

    const std::filesystem::path summary_json = spec.out_dir / "summary.json";
    const std::filesystem::path summary_txt = spec.out_dir / "summary.txt";
    write_text(summary_json, summary.dump(2) + "\n");
    std::ostringstream text;
    print_matrix(text, result);
    write_text(summary_txt, text.str());
    result.files.push_back(summary_json);
    result.files.push_back(summary_txt);
    return result;
}

void print_matrix(std::ostream& out, const SuiteResult& result)
{
    std::size_t w_suite = 5, w_subject = 7, w_check = 5;
    for (const MatrixEntry& e : result.entries) {
        w_suite = std::max(w_suite, e.suite.size());
        w_subject = std::max(w_subject, e.subject.size());
        w_check = std::max(w_check, e.check.size());
    }
    auto row = [&](std::string_view a, std::string_view b, std::string_view c, std::string_view d,
                   std::string_view e, std::string_view f, std::string_view g) {
        out << std::left << std::setw(static_cast<int>(w_suite)) << a << "  " << std::setw(static_cast<int>(w_subject))
            << b << "  " << std::setw(static_cast<int>(w_check)) << c << "  " << std::setw(8) << d << "  "
            << std::setw(8) << e << "  " << std::setw(24) << f << "  " << g << '\n';
    };
    row("suite", "subject", "check", "expected", "observed", "value", "status");
    for (const MatrixEntry& e : result.entries)
        row(e.suite, e.subject, e.check, to_string(e.expected), e.passed ? "pass" : "fail", fmt(e.value),
            e.matches() ? "ok" : "DEVIATION");

    const auto dev = result.deviations();
    out << '\n' << result.entries.size() << " entries, " << dev.size() << " deviations\n";
    for (const MatrixEntry* e : dev)
        out << "deviation: " << e->suite << " / " << e->subject << " / " << e->check << ": expected "
            << to_string(e->expected) << ", observed " << (e->passed ? "pass" : "fail") << " (" << e->note << ")\n";
}

}  // namespace bicomb
