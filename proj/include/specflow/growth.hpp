// Family constants of type-(A) operator families, the explicit
// eigenvalue-growth envelope, and the safe step size that keeps arsinh
// displacements of all eigenvalues below a target eps.

#pragma once

#include "specflow/operator_family.hpp"

namespace specflow {

// Universal constants of the safe-step formula. C0 is the maximum of
// (1 + |t|)/sqrt(1 + t^2), attained at t = 1; R is fixed at 2 so that
// |eta|/(1 + |eta|) > 1/2 holds with a strict margin for |eta| >= R, which
// makes C2 = min(1/(R+1), 1/(2 C0)) = 1/3.
inline constexpr double kGrowthC0 = 1.4142135623730951;
inline constexpr double kGrowthC1 = 0.25;
inline constexpr double kGrowthR = 2.0;
inline constexpr double kGrowthC2 = 1.0 / 3.0;

struct FamilyConstants {
    double alpha = 0;  // coercivity infimum over the grid, > 0
    double beta = 0;   // derivative-norm supremum over the grid
    double c = 0;      // beta / alpha
    Interval interval;
    int grid_points = 0;
};

// Grid estimate of the constants with respect to the graph norm of A(t_lo):
// with W = (I + A(t_lo)^2)^(-1/2),
//   alpha = min over the grid of the smallest singular value of [I; A(t)] W,
//   beta  = max over the grid of the largest singular value of A'(t) W,
// both computed at grid_points equispaced samples of the interval.
// The quotient c = beta/alpha bounds ||A'(t)u|| <= c (||u|| + ||A(t)u||).
FamilyConstants family_constants(const OperatorFamily& family, Interval interval,
                                 int grid_points = 64);

// (1 + |lambda0|) (exp(c dt) - 1).
double growth_envelope(double lambda0, double c, double dt);

// delta = c^{-1} ln(min(C1, eps C2) + 1). Requires eps > 0 and c >= 0;
// returns +infinity for c == 0 (callers clamp).
double safe_step(double c, double eps);

}  // namespace specflow
