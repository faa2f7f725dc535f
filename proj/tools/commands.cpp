#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "config.hpp"
#include "specflow/eigh.hpp"
#include "specflow/format.hpp"
#include "specflow/growth.hpp"
#include "specflow/lifting.hpp"
#include "svg.hpp"

namespace specflow::cli {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_json_line(std::ostream& os, const nlohmann::json& j) { os << j.dump() << "\n"; }

}  // namespace

int cmd_spectrum(const std::string& config_path, const std::string& out_dir) {
    const SpectrumConfig cfg = parse_spectrum_config(load_json_file(config_path));

    SpectrumWindow window = cfg.torus ? torus_spectrum(*cfg.torus, cfg.count)
                                      : canonical_window(eigh_values(*cfg.matrix));

    std::filesystem::create_directories(out_dir);
    {
        auto out = open_output(std::filesystem::path(out_dir) / "spectrum.json");
        write_json_line(out, window_to_json(window));
    }
    {
        auto out = open_output(std::filesystem::path(out_dir) / "spectrum.csv");
        for (long j = window.index_lo(); j <= window.index_hi(); ++j)
            out << j << ',' << format_double(window.at(j)) << '\n';
    }
    return 0;
}

int cmd_track(const std::string& config_path, const std::string& out_dir, bool svg) {
    const TrackConfig cfg = parse_track_config(load_json_file(config_path));

    OperatorFamily family = [&]() {
        if (!cfg.loop) return linear_family(cfg.a0, cfg.a1);
        // out and back: t in [0, 1/2] walks a0 -> a1, then retraces
        const std::size_t n = cfg.a0.dim();
        Matrix diff = cfg.a1 - cfg.a0;
        auto eval = [a0 = cfg.a0, a1 = cfg.a1](double t) {
            const double s = 1.0 - std::fabs(2.0 * t - 1.0);
            return a0 * (1.0 - s) + a1 * s;
        };
        auto deriv = [diff](double t) { return diff * (t < 0.5 ? 2.0 : -2.0); };
        return OperatorFamily({0.0, 1.0}, n, std::move(eval), std::move(deriv));
    }();

    TrackOptions opts;
    opts.eps = cfg.eps;
    opts.controller = cfg.controller;
    opts.fixed_steps = cfg.steps;
    opts.max_shift = cfg.max_shift;

    std::filesystem::create_directories(out_dir);
    TrackedPath path;
    try {
        path = track_path(family, opts);
    } catch (const TrackError& e) {
        auto out = open_output(std::filesystem::path(out_dir) / "track.json");
        write_json_line(out, nlohmann::json{{"error", e.what()},
                                            {"interval", {e.t_lo, e.t_hi}}});
        std::cerr << e.what() << "\n";
        return 1;
    }

    {
        auto out = open_output(std::filesystem::path(out_dir) / "track.csv");
        write_path_csv(path, out);
    }
    {
        auto out = open_output(std::filesystem::path(out_dir) / "track.json");
        write_json_line(out, path_summary(path));
    }
    if (svg) {
        auto out = open_output(std::filesystem::path(out_dir) / "track.svg");
        write_path_svg(path, out);
    }
    return 0;
}

int cmd_distance(const std::string& config_path) {
    const DistanceConfig cfg = parse_distance_config(load_json_file(config_path));

    SpectrumWindow a = [&] {
        try {
            return window_from_json(load_json_file(cfg.window_a));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(cfg.window_a + ": " + e.what());
        }
    }();
    SpectrumWindow b = [&] {
        try {
            return window_from_json(load_json_file(cfg.window_b));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(cfg.window_b + ": " + e.what());
        }
    }();

    nlohmann::json out;
    if (a.index_lo() == b.index_lo() && a.size() == b.size())
        out["d_a"] = arsinh_distance(a, b);
    const ConfDistance q = quotient_distance(a, b, cfg.max_shift);
    if (q.finite()) {
        out["dbar"] = q.distance;
        out["shift"] = q.shift;
    } else {
        out["dbar"] = nullptr;  // infinity sentinel: no feasible overlap
    }
    write_json_line(std::cout, out);
    return 0;
}

int cmd_counterexample(const std::vector<int>& delta, const std::vector<long>& f,
                       std::size_t count) {
    if (delta.size() != 3) throw ConfigError("counterexample: delta needs 3 entries");
    if (f.size() != 9) throw ConfigError("counterexample: f needs 9 entries");
    for (int d : delta)
        if (d != 0 && d != 1) throw ConfigError("counterexample: delta entries must be 0 or 1");

    const FlatTorus base = make_flat_torus(Matrix::identity(3), delta);
    const FlatTorus pulled = pullback(base, f);  // rejects non-unimodular f
    const FlatTorus reference = make_flat_torus(Matrix::identity(3), {1, 0, 0});

    const SpectrumWindow w_base = torus_spectrum(base, count);
    const SpectrumWindow w_pulled = torus_spectrum(pulled, count);
    const SpectrumWindow w_ref = torus_spectrum(reference, count);

    auto equal_windows = [](const SpectrumWindow& u, const SpectrumWindow& v) {
        if (u.index_lo() != v.index_lo() || u.size() != v.size()) return false;
        return arsinh_distance(u, v) <= 1e-10;
    };

    const bool isospectral = equal_windows(w_base, w_pulled);
    const bool distinct = !equal_windows(w_base, w_ref);

    auto smallest_positive = [](const SpectrumWindow& w) {
        for (long j = w.index_lo(); j <= w.index_hi(); ++j)
            if (w.at(j) > 0.0) return w.at(j);
        return 0.0;
    };
    std::cout << "base torus:      delta=(" << delta[0] << "," << delta[1] << "," << delta[2]
              << "), smallest positive eigenvalue " << format_double(smallest_positive(w_base))
              << "\n";
    std::cout << "pulled back:     delta=(" << pulled.delta[0] << "," << pulled.delta[1] << ","
              << pulled.delta[2] << "), smallest positive eigenvalue "
              << format_double(smallest_positive(w_pulled)) << "\n";
    std::cout << "reference torus: delta=(1,0,0), smallest positive eigenvalue "
              << format_double(smallest_positive(w_ref)) << "\n";
    std::cout << "isospectral: " << (isospectral ? "true" : "false")
              << ", distinct: " << (distinct ? "true" : "false") << "\n";
    return (isospectral && distinct) ? 0 : 1;
}

int cmd_constants() {
    nlohmann::json table = nlohmann::json::array();
    for (double c : {0.5, 1.0, 2.0, 4.0})
        for (double eps : {0.01, 0.1, 0.3, 1.0})
            table.push_back({{"C", c}, {"eps", eps}, {"delta", safe_step(c, eps)}});
    write_json_line(std::cout, nlohmann::json{{"C0", kGrowthC0},
                                              {"C1", kGrowthC1},
                                              {"C2", kGrowthC2},
                                              {"R", kGrowthR},
                                              {"safe_step_table", table}});
    return 0;
}

}  // namespace specflow::cli
