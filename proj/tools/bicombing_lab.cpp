// bicombing-lab: runs verification suites and exports figure data.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bicomb/figure.hpp"
#include "bicomb/suite.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Verification suites and figure export for geodesic bicombings"};
    app.require_subcommand(1);

    bicomb::SuiteSpec spec;
    std::string suite_name = "all";
    std::string out_dir = "out";
    auto* run = app.add_subcommand("run", "Run a verification suite and write reports");
    run->add_option("--suite", suite_name, "Suite name, or 'all'")->capture_default_str();
    run->add_option("--delta", spec.delta, "Perturbation height in [0, 1/64]")->capture_default_str();
    run->add_option("--seed", spec.seed, "Sampling seed")->capture_default_str();
    run->add_option("--tuples", spec.tuples, "Sampled tuples per property check")->capture_default_str();
    run->add_option("--tol", spec.tol, "Tolerance of the property checks")->capture_default_str();
    run->add_option("--out", out_dir, "Output directory")->capture_default_str();

    std::string figure_name;
    double figure_delta = 1.0 / 64.0;
    std::string figure_out;
    auto* figure = app.add_subcommand("figure", "Export the polylines of a figure as CSV");
    figure->add_option("--name", figure_name, "space_X_with_geodesic, convexity_pair, folded_X1 or midpoint_X1")
        ->required();
    figure->add_option("--delta", figure_delta, "Perturbation height in [0, 1/64]")->capture_default_str();
    figure->add_option("--out", figure_out, "Output CSV file, '-' for stdout")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            spec.name = bicomb::suite_from_string(suite_name);
            spec.out_dir = out_dir;
            const bicomb::SuiteResult result = bicomb::run_suite(spec);
            bicomb::print_matrix(std::cout, result);
            std::cout << "reports written to " << spec.out_dir.string() << '\n';
            return result.exit_code();
        }
        const bicomb::FigureName name = bicomb::figure_from_string(figure_name);
        if (figure_out == "-")
            bicomb::write_figure(std::cout, name, figure_delta);
        else
            bicomb::export_figure(name, figure_delta, figure_out);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "bicombing-lab: error: " << e.what() << '\n';
        return 2;
    }
}
