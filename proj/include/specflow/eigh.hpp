// Symmetric eigensolver: Householder reduction to tridiagonal form followed
// by the implicit-shift QL iteration. Self-contained, O(n^3), intended for
// dense matrices up to a few hundred rows.

#pragma once

#include <vector>

#include "specflow/matrix.hpp"

namespace specflow {

struct EighResult {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // column k pairs with eigenvalues[k]
};

// Full decomposition. Throws std::invalid_argument for non-symmetric input
// (relative tolerance 1e-12) and std::runtime_error if QL fails to converge.
EighResult eigh(const Matrix& a);

// Eigenvalues only; skips the transform accumulation (noticeably faster for
// large n, used by oracles on 2048-point discretizations).
std::vector<double> eigh_values(const Matrix& a);

}  // namespace specflow
