// specflow — spectra of self-adjoint matrix families along parameter paths:
// closed-form flat-torus Dirac spectra, arsinh distances between spectra,
// eigenvalue tracking with spectral flow, and the T^3 spin-structure
// counterexample.
//
// Exit codes: 0 success, 1 computational failure, 2 validation failure.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "specflow/lifting.hpp"

int main(int argc, char** argv) {
    CLI::App app{"spectral paths, distances and flows"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    bool svg = false;

    auto* spectrum = app.add_subcommand("spectrum", "compute a spectrum window (torus or matrix)");
    spectrum->add_option("--config", config_path, "run-config JSON")->required();
    spectrum->add_option("--out", out_dir, "output directory");

    auto* track = app.add_subcommand("track", "track a family and compute its spectral flow");
    track->add_option("--config", config_path, "run-config JSON")->required();
    track->add_option("--out", out_dir, "output directory");
    track->add_flag("--svg", svg, "also plot the lifted eigenvalue curves");

    auto* distance = app.add_subcommand("distance", "arsinh distance between two window files");
    distance->add_option("--config", config_path, "run-config JSON")->required();

    std::vector<int> delta = {1, 1, 0};
    std::vector<long> shear = {1, 1, 0, 0, 1, 0, 0, 0, 1};
    std::size_t count = 200;
    auto* counter = app.add_subcommand("counterexample",
                                       "T^3 spin-structure counterexample (isospectral pullback, "
                                       "distinct spectra)");
    counter->add_option("--delta", delta, "base spin structure (3 entries)")->expected(3)->delimiter(',');
    counter->add_option("--f", shear, "unimodular integer map, row-major (9 entries)")->expected(9)->delimiter(',');
    counter->add_option("--count", count, "eigenvalues per side to compare");

    auto* constants =
        app.add_subcommand("constants", "print the safe-step constants and a delta table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        using namespace specflow::cli;
        if (spectrum->parsed()) return cmd_spectrum(config_path, out_dir);
        if (track->parsed()) return cmd_track(config_path, out_dir, svg);
        if (distance->parsed()) return cmd_distance(config_path);
        if (counter->parsed()) return cmd_counterexample(delta, shear, count);
        if (constants->parsed()) return cmd_constants();
    } catch (const specflow::cli::ConfigError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
