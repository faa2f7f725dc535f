// Shared generators and independent oracles for the test suites. Everything
// here is test-side: oracles must not reuse the implementation paths they
// check.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "specflow/lifting.hpp"
#include "specflow/matrix.hpp"
#include "specflow/operator_family.hpp"
#include "specflow/spectrum_window.hpp"

namespace specflow::testing {

inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale / std::sqrt(static_cast<double>(n)));
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double x = g(rng);
            a(i, j) = x;
            a(j, i) = x;
        }
    return a;
}

inline Matrix random_spd(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    Matrix a = random_symmetric(rng, n, scale);
    Matrix b = a.transposed() * a;
    for (std::size_t i = 0; i < n; ++i) b(i, i) += 0.2 * scale * scale;
    return b;
}

inline std::vector<double> random_sorted_values(std::mt19937_64& rng, std::size_t len,
                                                double spread = 3.0) {
    std::normal_distribution<double> g(0.0, spread);
    std::vector<double> v(len);
    for (double& x : v) x = g(rng);
    std::sort(v.begin(), v.end());
    return v;
}

inline SpectrumWindow random_window(std::mt19937_64& rng, std::size_t len, long index_lo,
                                    double spread = 3.0) {
    return SpectrumWindow(index_lo, random_sorted_values(rng, len, spread));
}

// Same family on a sub-interval (same parameter values).
inline OperatorFamily restrict_family(const OperatorFamily& f, double lo, double hi) {
    return OperatorFamily({lo, hi}, f.dimension(), [f](double t) { return f(t); },
                          [f](double t) { return f.derivative(t); });
}

// s -> A(lo + hi - s): runs the same path backwards.
inline OperatorFamily reverse_family(const OperatorFamily& f) {
    const Interval iv = f.interval();
    const double sum = iv.lo + iv.hi;
    return OperatorFamily(iv, f.dimension(), [f, sum](double t) { return f(sum - t); },
                          [f, sum](double t) { return f.derivative(sum - t) * -1.0; });
}

// Out-and-back loop through a linear segment a0 -> a1 -> a0 on [0,1].
inline OperatorFamily loop_family(const Matrix& a0, const Matrix& a1) {
    Matrix diff = a1 - a0;
    return OperatorFamily(
        {0.0, 1.0}, a0.dim(),
        [a0, a1](double t) {
            const double s = 1.0 - std::fabs(2.0 * t - 1.0);
            return a0 * (1.0 - s) + a1 * s;
        },
        [diff](double t) { return diff * (t < 0.5 ? 2.0 : -2.0); });
}

// Fixed-grid tracking that refines eps (and the grid with it) when a sample
// window's even-cover radius bounds eps from above — the response the
// tracking contract asks of callers. Flows do not depend on the refinement.
inline TrackedPath track_fixed_refining(const OperatorFamily& f, double eps, int steps) {
    for (int attempt = 0; attempt < 10; ++attempt) {
        TrackOptions opts;
        opts.eps = eps;
        opts.controller = StepController::fixed;
        opts.fixed_steps = steps;
        try {
            return track_path(f, opts);
        } catch (const TrackError&) {
            eps *= 0.5;
            steps *= 2;
        }
    }
    throw std::runtime_error("track_fixed_refining: refinement exhausted");
}

// Independent lattice oracle: plain box scan with its own norm evaluation.
struct BruteLatticePoint {
    std::vector<long> z;
    double norm2;
};

inline std::vector<BruteLatticePoint> brute_force_lattice(const Matrix& m,
                                                          const std::vector<double>& shift,
                                                          double radius, long box_bound) {
    const std::size_t n = m.dim();
    std::vector<BruteLatticePoint> out;
    std::vector<long> z(n, -box_bound);
    const double r2 = radius * radius * (1.0 + 1e-12);
    while (true) {
        double q = 0.0;
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t e = 0; e < n; ++e)
                q += m(d, e) * (z[d] + shift[d]) * (z[e] + shift[e]);
        if (q <= r2) out.push_back({z, q});
        std::size_t i = n;
        while (i-- > 0) {
            if (++z[i] <= box_bound) break;
            z[i] = -box_bound;
            if (i == 0) {
                std::sort(out.begin(), out.end(),
                          [](const BruteLatticePoint& a, const BruteLatticePoint& b) {
                              if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
                              return a.z < b.z;
                          });
                return out;
            }
        }
    }
}

// Discretized circle operator, squared: the 4th-order antiperiodic central
// difference of -d^2/dtheta^2 on n_grid points of a circle with
// circumference L. (A central first-derivative stencil would annihilate the
// Nyquist sawtooth and pollute the low spectrum with spurious modes; the
// second-derivative stencil has no such kernel.) The circle operator's
// spectrum is the signed square-root pairs of this matrix's eigenvalues.
inline Matrix circle_operator_squared(std::size_t n_grid, double circumference) {
    const double h = circumference / static_cast<double>(n_grid);
    const double c0 = 30.0 / (12.0 * h * h);
    const double c1 = -16.0 / (12.0 * h * h);
    const double c2 = 1.0 / (12.0 * h * h);
    const long n = static_cast<long>(n_grid);

    Matrix m(n_grid);
    for (long l = 0; l < n; ++l) {
        // antiperiodic wrap: each crossing of the seam flips the sign
        auto add = [&](long k, double v) {
            while (k < 0) {
                k += n;
                v = -v;
            }
            while (k >= n) {
                k -= n;
                v = -v;
            }
            m(static_cast<std::size_t>(l), static_cast<std::size_t>(k)) += v;
        };
        add(l, c0);
        add(l + 1, c1);
        add(l - 1, c1);
        add(l + 2, c2);
        add(l - 2, c2);
    }
    return m;
}

}  // namespace specflow::testing
