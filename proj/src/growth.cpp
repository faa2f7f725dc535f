#include "specflow/growth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "specflow/eigh.hpp"

namespace specflow {

namespace {

// (I + A^2)^(-1/2) for symmetric A, through its eigendecomposition.
Matrix graph_norm_whitener(const Matrix& a) {
    EighResult ed = eigh(a);
    const std::size_t n = a.dim();
    Matrix w(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double scale = 1.0 / std::sqrt(1.0 + ed.eigenvalues[k] * ed.eigenvalues[k]);
                s += ed.eigenvectors(i, k) * scale * ed.eigenvectors(j, k);
            }
            w(i, j) = s;
        }
    return w;
}

}  // namespace

FamilyConstants family_constants(const OperatorFamily& family, Interval interval,
                                 int grid_points) {
    if (!(interval.lo < interval.hi))
        throw std::invalid_argument("family_constants: degenerate interval");
    if (grid_points < 2) throw std::invalid_argument("family_constants: grid_points must be >= 2");
    if (!family.interval().contains(interval.lo) || !family.interval().contains(interval.hi))
        throw std::invalid_argument("family_constants: interval outside the family domain");

    const Matrix w = graph_norm_whitener(family(interval.lo));

    double alpha = std::numeric_limits<double>::infinity();
    double beta = 0.0;
    for (int g = 0; g < grid_points; ++g) {
        const double t =
            interval.lo + interval.length() * static_cast<double>(g) / (grid_points - 1);

        const Matrix at = family(t);
        // alpha(t)^2 = lambda_min(W (I + A^2) W) = lambda_min((A W)ᵀ(A W) + W W)
        const Matrix aw = at * w;
        Matrix b = aw.transposed() * aw;
        b += w * w;
        const double lam_min = symmetric_eig_bounds(b).first;
        alpha = std::min(alpha, std::sqrt(std::max(0.0, lam_min)));

        // beta(t) = sigma_max(A'(t) W)
        const Matrix dw = family.derivative(t) * w;
        beta = std::max(beta, spectral_norm(dw));
    }

    if (!(alpha > 0.0))
        throw std::runtime_error("family_constants: nonpositive coercivity estimate");
    return {alpha, beta, beta / alpha, interval, grid_points};
}

double growth_envelope(double lambda0, double c, double dt) {
    return (1.0 + std::fabs(lambda0)) * std::expm1(c * dt);
}

double safe_step(double c, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("safe_step: eps must be > 0");
    if (c < 0.0) throw std::invalid_argument("safe_step: c must be >= 0");
    if (c == 0.0) return std::numeric_limits<double>::infinity();
    return std::log1p(std::min(kGrowthC1, eps * kGrowthC2)) / c;
}

}  // namespace specflow
