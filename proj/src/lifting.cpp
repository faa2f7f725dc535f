#include "specflow/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "specflow/eigh.hpp"
#include "specflow/format.hpp"

namespace specflow {

TrackError::TrackError(const std::string& what, double lo, double hi)
    : std::runtime_error(what + " (interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "])"),
      t_lo(lo),
      t_hi(hi) {}

long TrackedPath::prefix_shift(std::size_t i) const {
    long k = 0;
    for (std::size_t l = 0; l < i && l < step_shifts.size(); ++l) k += step_shifts[l];
    return k;
}

long TrackedPath::label_lo(std::size_t i) const { return windows.at(i).index_lo() - prefix_shift(i); }

long TrackedPath::label_hi(std::size_t i) const { return windows.at(i).index_hi() - prefix_shift(i); }

double TrackedPath::lifted(long j, std::size_t i) const {
    return windows.at(i).at(j + prefix_shift(i));
}

namespace {

// eps must stay below the even-cover radius wherever the radius is defined;
// windows without a value on each side of u(0) have no radius to violate.
void check_cover_radius(const SpectrumWindow& w, double eps, double t) {
    double radius;
    try {
        radius = even_cover_radius(w);
    } catch (const std::invalid_argument&) {
        return;
    }
    if (eps >= radius)
        throw TrackError("track_path: eps " + std::to_string(eps) +
                             " is not below the even-cover radius " + std::to_string(radius) +
                             " at sample t=" + std::to_string(t),
                         t, t);
}

struct StepResult {
    SpectrumWindow window;
    long step_shift;
    double certificate;
};

StepResult match_step(const SpectrumWindow& prev, const SpectrumWindow& next, double eps,
                      long max_shift) {
    const long bound =
        max_shift >= 0 ? max_shift : static_cast<long>(std::max(prev.size(), next.size()));
    // Complete finite spectra: every index is reliable, no truncation guard.
    const ShiftMatch m = match_windows(prev, next, eps, bound, {.edge_guard = false});
    // Stored in the enumeration-offset convention: W_{i-1}(j) ~ W_i(j + k).
    return {next, -m.shift, m.certified_sup};
}

}  // namespace

TrackedPath track_path(const OperatorFamily& family, const TrackOptions& opts) {
    if (!(opts.eps > 0.0)) throw std::invalid_argument("track_path: eps must be > 0");

    const Interval iv = family.interval();
    TrackedPath path;
    path.eps = opts.eps;

    auto append_sample = [&](double t, SpectrumWindow w, long shift, double cert) {
        check_cover_radius(w, opts.eps, t);
        path.samples.push_back(t);
        path.windows.push_back(std::move(w));
        if (path.samples.size() > 1) {
            path.step_shifts.push_back(shift);
            path.certificates.push_back(cert);
            path.cumulative_shift += shift;
        }
    };

    append_sample(iv.lo, sample_spectrum(family, iv.lo), 0, 0.0);

    if (opts.controller == StepController::fixed) {
        if (opts.fixed_steps < 1)
            throw std::invalid_argument("track_path: fixed controller needs at least one step");
        for (int i = 1; i <= opts.fixed_steps; ++i) {
            const double t =
                iv.lo + iv.length() * static_cast<double>(i) / opts.fixed_steps;
            SpectrumWindow w = sample_spectrum(family, t);
            try {
                StepResult step = match_step(path.windows.back(), w, opts.eps, opts.max_shift);
                append_sample(t, std::move(step.window), step.step_shift, step.certificate);
            } catch (const NoMatchError&) {
                throw TrackError("track_path: no matching shift on a fixed step",
                                 path.samples.back(), t);
            } catch (const AmbiguousMatchError&) {
                throw TrackError("track_path: ambiguous shift on a fixed step",
                                 path.samples.back(), t);
            }
        }
        return path;
    }

    // Adaptive controller: base step from the safe-step formula with
    // grid-estimated constants, clamped; bisect a failing step up to 40 times.
    const FamilyConstants consts = family_constants(family, iv, opts.constants_grid);
    double base = safe_step(consts.c, opts.eps);
    base = std::min(base, 0.25 * iv.length());
    base = std::max(base, 1e-6 * iv.length());

    const double t_end_slack = 1e-12 * (1.0 + std::fabs(iv.hi));
    while (path.samples.back() < iv.hi - t_end_slack) {
        const double t_from = path.samples.back();
        double dt = std::min(base, iv.hi - t_from);
        bool accepted = false;
        for (int attempt = 0; attempt <= 40; ++attempt) {
            const double t_next = (t_from + dt >= iv.hi - t_end_slack) ? iv.hi : t_from + dt;
            SpectrumWindow w = sample_spectrum(family, t_next);
            try {
                StepResult step = match_step(path.windows.back(), w, opts.eps, opts.max_shift);
                append_sample(t_next, std::move(step.window), step.step_shift, step.certificate);
                accepted = true;
                break;
            } catch (const NoMatchError&) {
            } catch (const AmbiguousMatchError&) {
            }
            dt *= 0.5;
        }
        if (!accepted)
            throw TrackError("track_path: step refinement exhausted (40 bisections)", t_from,
                             t_from + dt * 2.0);
    }
    return path;
}

long spectral_flow(const TrackedPath& path) { return path.cumulative_shift; }

long negative_index_flow_oracle(const Matrix& a_start, const Matrix& a_end) {
    auto count_negative = [](const Matrix& a, const char* which) {
        const std::vector<double> eigs = eigh_values(a);
        double max_abs = 0.0;
        for (double l : eigs) max_abs = std::max(max_abs, std::fabs(l));
        const double tol = 1e-10 * std::max(1.0, max_abs);
        long negatives = 0;
        for (double l : eigs) {
            if (std::fabs(l) <= tol)
                throw std::invalid_argument(
                    std::string("negative_index_flow_oracle: ") + which +
                    " endpoint has a (near-)zero eigenvalue");
            if (l < 0.0) ++negatives;
        }
        return negatives;
    };
    return count_negative(a_start, "start") - count_negative(a_end, "end");
}

void write_path_csv(const TrackedPath& path, std::ostream& os) {
    os << "t,j,lambda\n";
    for (std::size_t i = 0; i < path.samples.size(); ++i) {
        const std::string t = format_double(path.samples[i]);
        for (long j = path.label_lo(i); j <= path.label_hi(i); ++j)
            os << t << ',' << j << ',' << format_double(path.lifted(j, i)) << '\n';
    }
}

nlohmann::json path_summary(const TrackedPath& path) {
    return nlohmann::json{{"flow", spectral_flow(path)},
                          {"steps", path.steps()},
                          {"eps", path.eps},
                          {"cumulative_shift", path.cumulative_shift},
                          {"step_shifts", path.step_shifts},
                          {"certificates", path.certificates},
                          {"samples", path.samples}};
}

}  // namespace specflow
