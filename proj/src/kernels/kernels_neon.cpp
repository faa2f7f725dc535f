// NEON variants for aarch64, mirroring kernels_avx2.cpp two lanes at a time.
// Same bit-exactness contract as the AVX2 file: no FMA, scalar operation
// order per element.

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <cmath>

#include "specflow/kernels.hpp"

namespace specflow::kernels::neon {

bool supported() {
    return true;  // NEON is baseline on aarch64
}

double sup_abs_diff(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t va = vld1q_f64(a + i);
        const float64x2_t vb = vld1q_f64(b + i);
        acc = vmaxq_f64(acc, vabsq_f64(vsubq_f64(va, vb)));
    }
    double m = vmaxvq_f64(acc);
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

void quadratic_forms(const double* coords, std::size_t n_points, std::size_t dim,
                     const double* m, double* out) {
    std::size_t i = 0;
    for (; i + 2 <= n_points; i += 2) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t d = 0; d < dim; ++d) {
            const float64x2_t xd = vld1q_f64(coords + d * n_points + i);
            for (std::size_t e = 0; e < dim; ++e) {
                const float64x2_t xe = vld1q_f64(coords + e * n_points + i);
                const float64x2_t me = vdupq_n_f64(m[d * dim + e]);
                acc = vaddq_f64(acc, vmulq_f64(vmulq_f64(me, xd), xe));
            }
        }
        vst1q_f64(out + i, acc);
    }
    for (; i < n_points; ++i) {
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

}  // namespace specflow::kernels::neon

#endif  // aarch64
