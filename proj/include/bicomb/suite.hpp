#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bicomb/verify.hpp"

namespace bicomb {

enum class SuiteName {
    counterexample_sigma_delta,
    counterexample_sigma_tilde,
    counterexample_X1,
    counterexample_tau_X1,
    reversibilize_demo,
    funcspace_demo,
    rigidity,
    thresholds,
    all,
};

std::string_view to_string(SuiteName name);
SuiteName suite_from_string(std::string_view name);
/// Every suite except `all`, in run order.
std::vector<SuiteName> concrete_suites();

struct SuiteSpec {
    SuiteName name = SuiteName::all;
    double delta = 1.0 / 64.0;
    std::uint64_t seed = 42;
    std::size_t tuples = 20000;
    double tol = 1e-9;
    std::filesystem::path out_dir = "out";

    /// Throws std::invalid_argument unless delta is in [0, 1/64], tuples >= 1
    /// and tol > 0.
    void validate() const;
};

enum class Expect { pass, fail, any };

std::string_view to_string(Expect e);

/// One row of the pass/fail matrix.
struct MatrixEntry {
    std::string suite;
    std::string subject;  ///< bicombing, space or quantity under test
    std::string check;    ///< property name or a short description
    Expect expected = Expect::pass;
    bool passed = false;
    double value = 0.0;  ///< worst violation, or the measured quantity
    std::string note;    ///< criterion used to decide `passed`
    std::optional<PropertyReport> report;

    bool matches() const { return expected == Expect::any || (expected == Expect::pass) == passed; }
};

struct SuiteResult {
    std::vector<MatrixEntry> entries;
    std::vector<std::filesystem::path> files;

    std::vector<const MatrixEntry*> deviations() const;
    int exit_code() const { return deviations().empty() ? 0 : 1; }
};

/// Runs the suite(s), writes one JSON file per entry under
/// out_dir/<suite>/ plus out_dir/summary.txt and out_dir/summary.json, and
/// returns the observed matrix. Throws std::invalid_argument for an invalid
/// spec and std::runtime_error when a file cannot be written.
SuiteResult run_suite(const SuiteSpec& spec);

/// Human-readable matrix, one line per entry, followed by the deviations.
void print_matrix(std::ostream& out, const SuiteResult& result);

}  // namespace bicomb
