#include "specflow/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace specflow::kernels {

namespace scalar {

double sup_abs_diff(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

void quadratic_forms(const double* coords, std::size_t n_points, std::size_t dim,
                     const double* m, double* out) {
    for (std::size_t i = 0; i < n_points; ++i) {
        double acc = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            const double xd = coords[d * n_points + i];
            for (std::size_t e = 0; e < dim; ++e) {
                const double xe = coords[e * n_points + i];
                acc += (m[d * dim + e] * xd) * xe;
            }
        }
        out[i] = acc;
    }
}

}  // namespace scalar

void asinh_transform(const double* in, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::asinh(in[i]);
}

namespace {

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return avx2::supported();
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__) || defined(_M_ARM64)
            return neon::supported();
#else
            return false;
#endif
    }
    return false;
}

Isa detect() {
    if (const char* env = std::getenv("SPECFLOW_ISA")) {
        const std::string s(env);
        if (s == "scalar") return Isa::scalar;
        if (s == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
        if (s == "neon" && isa_available(Isa::neon)) return Isa::neon;
        // Unknown or unavailable request falls through to detection.
    }
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa g_active = detect();

}  // namespace

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "?";
}

Isa active() { return g_active; }

void force(Isa isa) {
    if (!isa_available(isa))
        throw std::invalid_argument(std::string("kernels: ISA not available: ") + isa_name(isa));
    g_active = isa;
}

double sup_abs_diff(const double* a, const double* b, std::size_t n) {
    switch (g_active) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: return avx2::sup_abs_diff(a, b, n);
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
        case Isa::neon: return neon::sup_abs_diff(a, b, n);
#endif
        default: return scalar::sup_abs_diff(a, b, n);
    }
}

void quadratic_forms(const double* coords, std::size_t n_points, std::size_t dim,
                     const double* m, double* out) {
    switch (g_active) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: return avx2::quadratic_forms(coords, n_points, dim, m, out);
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
        case Isa::neon: return neon::quadratic_forms(coords, n_points, dim, m, out);
#endif
        default: return scalar::quadratic_forms(coords, n_points, dim, m, out);
    }
}

}  // namespace specflow::kernels
