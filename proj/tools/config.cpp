#include "config.hpp"

#include <fstream>
#include <sstream>

namespace specflow::cli {

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void check_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    if (!obj.is_object()) throw ConfigError(where + ": expected a JSON object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw ConfigError(where + ": unknown key \"" + item.key() + "\"");
    }
}

Matrix matrix_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ConfigError(where + ": expected an array of rows");
    const std::size_t n = j.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw ConfigError(where + ": matrix must be square");
        for (std::size_t k = 0; k < n; ++k) {
            if (!j[i][k].is_number()) throw ConfigError(where + ": non-numeric entry");
            m(i, k) = j[i][k].get<double>();
        }
    }
    return m;
}

Matrix matrix_from_file(const std::string& path) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return matrix_from_json(load_json_file(path), path);

    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<double> row;
        double x;
        while (ls >> x) row.push_back(x);
        if (!ls.eof()) throw ConfigError(path + ": non-numeric entry");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ConfigError(path + ": empty matrix");
    const std::size_t n = rows.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ConfigError(path + ": matrix must be square");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = rows[i][k];
    }
    return m;
}

FlatTorus torus_from_json(const nlohmann::json& j) {
    check_keys(j, {"n", "gram", "delta"}, "torus");
    if (!j.contains("n") || !j.contains("gram") || !j.contains("delta"))
        throw ConfigError("torus: needs n, gram, delta");
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 1)
        throw ConfigError("torus: n must be a positive integer");
    const auto n = j["n"].get<std::size_t>();
    Matrix gram = matrix_from_json(j["gram"], "torus.gram");
    if (gram.dim() != n) throw ConfigError("torus: gram dimension != n");
    std::vector<int> delta;
    for (const auto& d : j["delta"]) {
        if (!d.is_number_integer()) throw ConfigError("torus: delta entries must be integers");
        delta.push_back(d.get<int>());
    }
    try {
        return make_flat_torus(std::move(gram), std::move(delta));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("torus: ") + e.what());
    }
}

SpectrumConfig parse_spectrum_config(const nlohmann::json& j) {
    check_keys(j, {"torus", "matrix", "matrix_file", "count"}, "spectrum config");
    SpectrumConfig cfg;
    int sources = 0;
    if (j.contains("torus")) {
        cfg.torus = torus_from_json(j["torus"]);
        ++sources;
    }
    if (j.contains("matrix")) {
        cfg.matrix = matrix_from_json(j["matrix"], "matrix");
        ++sources;
    }
    if (j.contains("matrix_file")) {
        cfg.matrix = matrix_from_file(j["matrix_file"].get<std::string>());
        ++sources;
    }
    if (sources != 1)
        throw ConfigError("spectrum config: exactly one of torus, matrix, matrix_file");
    if (j.contains("count")) {
        if (!j["count"].is_number_integer() || j["count"].get<long>() < 1)
            throw ConfigError("spectrum config: count must be a positive integer");
        cfg.count = j["count"].get<std::size_t>();
    }
    if (cfg.matrix && !cfg.matrix->is_symmetric())
        throw ConfigError("spectrum config: matrix must be symmetric");
    return cfg;
}

TrackConfig parse_track_config(const nlohmann::json& j) {
    check_keys(j, {"family", "eps", "controller", "steps", "max_shift", "loop"}, "track config");
    if (!j.contains("family")) throw ConfigError("track config: needs a family");
    const auto& fam = j["family"];
    check_keys(fam, {"kind", "a0", "a1", "a0_file", "a1_file"}, "track config family");
    if (fam.contains("kind") && fam["kind"].get<std::string>() != "linear")
        throw ConfigError("track config: only linear families are supported");

    TrackConfig cfg;
    auto load_end = [&](const char* inline_key, const char* file_key) {
        if (fam.contains(inline_key) == fam.contains(file_key))
            throw ConfigError(std::string("track config: exactly one of ") + inline_key + ", " +
                              file_key);
        return fam.contains(inline_key) ? matrix_from_json(fam[inline_key], inline_key)
                                        : matrix_from_file(fam[file_key].get<std::string>());
    };
    cfg.a0 = load_end("a0", "a0_file");
    cfg.a1 = load_end("a1", "a1_file");
    if (cfg.a0.dim() != cfg.a1.dim()) throw ConfigError("track config: a0 and a1 dimensions differ");
    if (!cfg.a0.is_symmetric() || !cfg.a1.is_symmetric())
        throw ConfigError("track config: endpoints must be symmetric");

    if (j.contains("eps")) {
        if (!j["eps"].is_number() || !(j["eps"].get<double>() > 0.0))
            throw ConfigError("track config: eps must be > 0");
        cfg.eps = j["eps"].get<double>();
    }
    if (j.contains("controller")) {
        const std::string c = j["controller"].get<std::string>();
        if (c == "fixed")
            cfg.controller = StepController::fixed;
        else if (c == "adaptive")
            cfg.controller = StepController::adaptive;
        else
            throw ConfigError("track config: controller must be \"fixed\" or \"adaptive\"");
    }
    if (j.contains("steps")) {
        if (!j["steps"].is_number_integer() || j["steps"].get<long>() < 1)
            throw ConfigError("track config: steps must be a positive integer");
        cfg.steps = j["steps"].get<int>();
    }
    if (j.contains("max_shift")) {
        if (!j["max_shift"].is_number_integer() || j["max_shift"].get<long>() < 0)
            throw ConfigError("track config: max_shift must be >= 0");
        cfg.max_shift = j["max_shift"].get<long>();
    }
    if (j.contains("loop")) {
        if (!j["loop"].is_boolean()) throw ConfigError("track config: loop must be a boolean");
        cfg.loop = j["loop"].get<bool>();
    }
    return cfg;
}

DistanceConfig parse_distance_config(const nlohmann::json& j) {
    check_keys(j, {"window_a", "window_b", "max_shift"}, "distance config");
    if (!j.contains("window_a") || !j.contains("window_b"))
        throw ConfigError("distance config: needs window_a and window_b");
    DistanceConfig cfg;
    cfg.window_a = j["window_a"].get<std::string>();
    cfg.window_b = j["window_b"].get<std::string>();
    if (j.contains("max_shift")) {
        if (!j["max_shift"].is_number_integer() || j["max_shift"].get<long>() < 0)
            throw ConfigError("distance config: max_shift must be >= 0");
        cfg.max_shift = j["max_shift"].get<long>();
    }
    return cfg;
}

}  // namespace specflow::cli
