// Run configuration for the specflow CLI: one JSON document per run,
// validated strictly (unknown keys are errors) before anything executes.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "specflow/lifting.hpp"
#include "specflow/torus.hpp"

namespace specflow::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);

// Rejects keys outside `allowed`.
void check_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                const std::string& where);

// Dense matrix from a JSON array of arrays.
Matrix matrix_from_json(const nlohmann::json& j, const std::string& where);

// Dense matrix from a file: .json holds an array of arrays, anything else is
// whitespace-separated rows.
Matrix matrix_from_file(const std::string& path);

FlatTorus torus_from_json(const nlohmann::json& j);

struct SpectrumConfig {
    std::optional<FlatTorus> torus;
    std::optional<Matrix> matrix;
    std::size_t count = 100;  // torus only
};
SpectrumConfig parse_spectrum_config(const nlohmann::json& j);

struct TrackConfig {
    Matrix a0, a1;
    bool loop = false;
    double eps = 0.05;
    StepController controller = StepController::adaptive;
    int steps = 64;
    long max_shift = -1;
};
TrackConfig parse_track_config(const nlohmann::json& j);

struct DistanceConfig {
    std::string window_a;
    std::string window_b;
    long max_shift = 512;
};
DistanceConfig parse_distance_config(const nlohmann::json& j);

}  // namespace specflow::cli
