// Constructive lift of the spectrum map along a sampled parameter path.
//
// The path is sampled finely enough that consecutive windows match under a
// unique shift; accumulating those shifts produces a single consistent
// enumeration lambda_j(t_i) = W_i(j + K_i) with K_i the prefix sum, anchored
// so that the lift at t_0 is the canonical window. The spectral flow is the
// accumulated shift at the endpoint — the signed number of eigenvalues that
// crossed 0 from below.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "specflow/growth.hpp"
#include "specflow/matching.hpp"
#include "specflow/operator_family.hpp"

namespace specflow {

enum class StepController { fixed, adaptive };

struct TrackOptions {
    double eps = 0.05;
    StepController controller = StepController::adaptive;
    int fixed_steps = 64;    // fixed controller: number of steps (fixed_steps + 1 samples)
    long max_shift = -1;     // shift search bound; -1 means the window length
    int constants_grid = 64; // adaptive controller: grid for family_constants
};

struct TrackError : std::runtime_error {
    double t_lo, t_hi;  // offending interval (t_lo == t_hi names a sample)
    TrackError(const std::string& what, double lo, double hi);
};

struct TrackedPath {
    std::vector<double> samples;          // t_0 < ... < t_N
    std::vector<SpectrumWindow> windows;  // canonical window per sample
    std::vector<long> step_shifts;        // k_i, i = 1..N: W_{i-1}(j) ~ W_i(j + k_i)
    std::vector<double> certificates;     // per-step sup arsinh displacement, < eps
    long cumulative_shift = 0;            // sum of step_shifts
    double eps = 0;

    std::size_t steps() const { return step_shifts.size(); }

    // K_i = sum of the first i step shifts (K_0 = 0).
    long prefix_shift(std::size_t i) const;

    // Lifted labels available at sample i; for complete matrix spectra this
    // range is the same for every i.
    long label_lo(std::size_t i) const;
    long label_hi(std::size_t i) const;

    // lambda_j(t_i) = W_i(j + K_i).
    double lifted(long j, std::size_t i) const;
};

// Samples the family over its interval, matches consecutive windows, and
// accumulates shifts. The fixed controller uses a uniform grid and fails on
// the offending interval; the adaptive controller steps by safe_step from
// grid-estimated family constants (clamped to [1e-6, 0.25] of the interval)
// and bisects a failing step up to 40 times. Where a sample window exposes
// both neighbor blocks around index 0, eps must stay below its even-cover
// radius; violations raise TrackError naming the sample.
TrackedPath track_path(const OperatorFamily& family, const TrackOptions& opts = {});

// The unique s with the lift at t_N equal to the canonical window of t_N
// shifted by s; equals cumulative_shift.
long spectral_flow(const TrackedPath& path);

// Independent spectral-flow oracle for invertible endpoints: the change
// n_neg(a_start) - n_neg(a_end) in the number of negative eigenvalues, which
// for finite Hermitian paths equals the flow of any connecting path. An
// endpoint with an eigenvalue within 1e-10 of 0 (relative to its largest
// magnitude) is std::invalid_argument.
long negative_index_flow_oracle(const Matrix& a_start, const Matrix& a_end);

// CSV with header "t,j,lambda", one row per sample and lifted label,
// shortest round-trip number formatting.
void write_path_csv(const TrackedPath& path, std::ostream& os);

// {"flow", "steps", "eps", "cumulative_shift", "step_shifts", "certificates",
//  "samples"}.
nlohmann::json path_summary(const TrackedPath& path);

}  // namespace specflow
