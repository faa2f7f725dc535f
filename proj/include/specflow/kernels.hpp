// Data-parallel inner loops behind the spectral metrics and the lattice
// enumeration, with scalar reference implementations and SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at runtime.
//
// The SIMD variants are written to be bit-identical to the scalar reference:
// same operation order per element, no FMA contraction, max-reductions only
// (associative for the NaN-free inputs these kernels receive). Equivalence
// tests assert exact equality of the two paths.

#pragma once

#include <cstddef>

namespace specflow::kernels {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);

// ISA selected for dispatched calls. Detection runs once; the environment
// variable SPECFLOW_ISA=scalar|avx2|neon overrides it at startup.
Isa active();

// Test hook. Throws std::invalid_argument if the ISA is unavailable here.
void force(Isa isa);

// max_i |a[i] - b[i]|; 0 for n == 0. Inputs must be NaN-free.
double sup_abs_diff(const double* a, const double* b, std::size_t n);

// Quadratic forms of a batch of points against one symmetric dim x dim
// matrix m (row-major): out[i] = sum_{d,e} m[d][e] * x_d[i] * x_e[i].
// Coordinates are laid out plane-major: coords[d * n_points + i].
void quadratic_forms(const double* coords, std::size_t n_points, std::size_t dim,
                     const double* m, double* out);

// Scalar helper, not dispatched: out[i] = asinh(in[i]). libm's asinh has no
// bit-exact vector counterpart, so the transform stays scalar and callers
// cache its output before running the kernels above.
void asinh_transform(const double* in, double* out, std::size_t n);

// Reference implementations, always available.
namespace scalar {
double sup_abs_diff(const double* a, const double* b, std::size_t n);
void quadratic_forms(const double* coords, std::size_t n_points, std::size_t dim,
                     const double* m, double* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool supported();
double sup_abs_diff(const double* a, const double* b, std::size_t n);
void quadratic_forms(const double* coords, std::size_t n_points, std::size_t dim,
                     const double* m, double* out);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
namespace neon {
bool supported();
double sup_abs_diff(const double* a, const double* b, std::size_t n);
void quadratic_forms(const double* coords, std::size_t n_points, std::size_t dim,
                     const double* m, double* out);
}  // namespace neon
#endif

}  // namespace specflow::kernels
