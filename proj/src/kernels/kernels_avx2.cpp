// AVX2 variants of the dispatchable kernels. Compiled with -mavx2 only on
// x86-64; callers go through the runtime dispatch in kernels.cpp.
//
// Bit-exactness contract: per element the operation order matches the scalar
// reference (sub, abs, max; mul, mul, add — no FMA), so results are identical
// to the scalar path, not merely close.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "specflow/kernels.hpp"

namespace specflow::kernels::avx2 {

bool supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

double sup_abs_diff(const double* a, const double* b, std::size_t n) {
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        const __m256d d = _mm256_and_pd(_mm256_sub_pd(va, vb), abs_mask);
        acc = _mm256_max_pd(acc, d);
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d m2 = _mm_max_pd(lo, hi);
    __m128d m1 = _mm_max_sd(m2, _mm_unpackhi_pd(m2, m2));
    double m = _mm_cvtsd_f64(m1);
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

void quadratic_forms(const double* coords, std::size_t n_points, std::size_t dim,
                     const double* m, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n_points; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t d = 0; d < dim; ++d) {
            const __m256d xd = _mm256_loadu_pd(coords + d * n_points + i);
            for (std::size_t e = 0; e < dim; ++e) {
                const __m256d xe = _mm256_loadu_pd(coords + e * n_points + i);
                const __m256d me = _mm256_set1_pd(m[d * dim + e]);
                acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(me, xd), xe));
            }
        }
        _mm256_storeu_pd(out + i, acc);
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

}  // namespace specflow::kernels::avx2

#endif  // x86-64
