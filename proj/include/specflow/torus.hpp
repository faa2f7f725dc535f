// Closed-form Dirac spectra of flat tori R^n/Z^n with spin structure labels
// delta in {0,1}^n, the pullback action of unimodular integer maps, and the
// shifted-lattice enumeration behind both.
//
// Spectrum convention (pinned by the n=1 discretization oracle and the
// pullback-isospectrality invariant): eigenvalues are +-2π ||xi||_{G^{-1}}
// over xi in Z^n + delta/2, each sign with multiplicity 2^{floor(n/2)-1} for
// xi != 0; xi = 0 (possible only for delta = 0) contributes the eigenvalue 0
// with multiplicity 2^{floor(n/2)}. For n = 1 the spectrum is the signed set
// {2π xi} with multiplicity 1.

#pragma once

#include <vector>

#include "specflow/matrix.hpp"
#include "specflow/spectrum_window.hpp"

namespace specflow {

struct FlatTorus {
    std::size_t n = 0;
    Matrix gram;             // symmetric positive definite
    std::vector<int> delta;  // entries in {0,1}
};

// Validates symmetry, positive definiteness (Cholesky must succeed) and the
// delta entries; throws std::invalid_argument otherwise.
FlatTorus make_flat_torus(Matrix gram, std::vector<int> delta);

struct LatticePoint {
    std::vector<long> z;     // integer part
    std::vector<double> xi;  // z + shift
    double norm = 0;         // sqrt(xiᵀ M xi)
};

// All xi in Z^n + shift with xiᵀ M xi <= radius², complete via the bounding
// box of the ellipsoid, sorted by norm with lexicographic tie-break on the
// integer part. M must be symmetric positive definite and radius > 0.
std::vector<LatticePoint> lattice_enumerate(const Matrix& inverse_gram,
                                            const std::vector<double>& shift, double radius);

// Canonical window holding at least `count` eigenvalues on each side of 0
// (where available), complete up to its largest included |eigenvalue|.
SpectrumWindow torus_spectrum(const FlatTorus& torus, std::size_t count);

// Pullback along an integer matrix f with det(f) = 1 (exact integer check):
// gram' = fᵀ G f, delta' = fᵀ delta mod 2. f is row-major n x n.
FlatTorus pullback(const FlatTorus& torus, const std::vector<long>& f);

}  // namespace specflow
