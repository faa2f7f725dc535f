#include "specflow/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "specflow/kernels.hpp"

namespace specflow {

namespace {

// Lower Cholesky factor, or nullopt when the matrix is not positive definite.
std::optional<Matrix> cholesky(const Matrix& a) {
    const std::size_t n = a.dim();
    Matrix l(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (!(s > 0.0)) return std::nullopt;
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

// Inverse of an SPD matrix from its Cholesky factor.
Matrix spd_inverse(const Matrix& a, const char* what) {
    const auto l = cholesky(a);
    if (!l) throw std::invalid_argument(std::string(what) + ": matrix is not positive definite");
    const std::size_t n = a.dim();
    Matrix inv(n);
    std::vector<double> col(n);
    for (std::size_t c = 0; c < n; ++c) {
        // solve L y = e_c, then Lᵀ x = y
        for (std::size_t i = 0; i < n; ++i) {
            double s = (i == c) ? 1.0 : 0.0;
            for (std::size_t k = 0; k < i; ++k) s -= (*l)(i, k) * col[k];
            col[i] = s / (*l)(i, i);
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = col[ii];
            for (std::size_t k = ii + 1; k < n; ++k) s -= (*l)(k, ii) * col[k];
            col[ii] = s / (*l)(ii, ii);
        }
        for (std::size_t i = 0; i < n; ++i) inv(i, c) = col[i];
    }
    return inv;
}

// Exact integer determinant (fraction-free Gaussian elimination).
long long integer_determinant(std::vector<long> m, std::size_t n) {
    std::vector<__int128> a(m.begin(), m.end());
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return static_cast<long long>(sign * a[n * n - 1]);
}

}  // namespace

FlatTorus make_flat_torus(Matrix gram, std::vector<int> delta) {
    const std::size_t n = gram.dim();
    if (n == 0) throw std::invalid_argument("make_flat_torus: dimension must be >= 1");
    if (delta.size() != n) throw std::invalid_argument("make_flat_torus: delta length != n");
    for (int d : delta)
        if (d != 0 && d != 1)
            throw std::invalid_argument("make_flat_torus: delta entries must be 0 or 1");
    require_symmetric(gram, "make_flat_torus");
    if (!cholesky(gram))
        throw std::invalid_argument("make_flat_torus: gram matrix is not positive definite");
    return {n, std::move(gram), std::move(delta)};
}

std::vector<LatticePoint> lattice_enumerate(const Matrix& inverse_gram,
                                            const std::vector<double>& shift, double radius) {
    const std::size_t n = inverse_gram.dim();
    if (shift.size() != n) throw std::invalid_argument("lattice_enumerate: shift length != n");
    if (!(radius > 0.0)) throw std::invalid_argument("lattice_enumerate: radius must be > 0");
    require_symmetric(inverse_gram, "lattice_enumerate");

    // Ellipsoid xiᵀ M xi <= r² lies in the box |xi_i| <= r sqrt((M^{-1})_ii).
    const Matrix gram = spd_inverse(inverse_gram, "lattice_enumerate");
    std::vector<long> z_lo(n), z_hi(n);
    std::size_t box = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double b = radius * std::sqrt(gram(i, i)) + 1e-9;
        z_lo[i] = static_cast<long>(std::ceil(-b - shift[i]));
        z_hi[i] = static_cast<long>(std::floor(b - shift[i]));
        if (z_hi[i] < z_lo[i]) return {};
        box *= static_cast<std::size_t>(z_hi[i] - z_lo[i] + 1);
        if (box > 50'000'000)
            throw std::runtime_error("lattice_enumerate: bounding box too large");
    }

    // Batch the quadratic forms: coordinates plane-major per dimension.
    std::vector<double> coords(n * box);
    std::vector<long> z(n, 0);
    for (std::size_t i = 0; i < n; ++i) z[i] = z_lo[i];
    for (std::size_t p = 0; p < box; ++p) {
        for (std::size_t i = 0; i < n; ++i)
            coords[i * box + p] = static_cast<double>(z[i]) + shift[i];
        for (std::size_t i = n; i-- > 0;) {
            if (++z[i] <= z_hi[i]) break;
            z[i] = z_lo[i];
        }
    }
    std::vector<double> norm2(box);
    kernels::quadratic_forms(coords.data(), box, n, inverse_gram.data().data(), norm2.data());

    const double r2 = radius * radius * (1.0 + 1e-12);
    std::vector<LatticePoint> points;
    for (std::size_t p = 0; p < box; ++p) {
        if (norm2[p] > r2) continue;
        LatticePoint pt;
        pt.z.resize(n);
        pt.xi.resize(n);
        long rem = static_cast<long>(p);
        for (std::size_t i = n; i-- > 0;) {
            const long width = z_hi[i] - z_lo[i] + 1;
            pt.z[i] = z_lo[i] + rem % width;
            rem /= width;
            pt.xi[i] = static_cast<double>(pt.z[i]) + shift[i];
        }
        pt.norm = std::sqrt(std::max(0.0, norm2[p]));
        points.push_back(std::move(pt));
    }
    std::sort(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.z < b.z;
    });
    return points;
}

SpectrumWindow torus_spectrum(const FlatTorus& torus, std::size_t count) {
    if (count < 1) throw std::invalid_argument("torus_spectrum: count must be >= 1");
    const std::size_t n = torus.n;
    const Matrix m = spd_inverse(torus.gram, "torus_spectrum");
    std::vector<double> shift(n);
    bool delta_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
        shift[i] = 0.5 * torus.delta[i];
        delta_zero = delta_zero && torus.delta[i] == 0;
    }

    const std::size_t mult_half = (n >= 2) ? (std::size_t{1} << (n / 2 - 1)) : 1;
    const std::size_t mult_zero = (n >= 2) ? (std::size_t{1} << (n / 2)) : 1;
    auto positives_of = [&](const LatticePoint& p) -> std::size_t {
        if (n == 1) return p.xi[0] > 0.0 ? 1 : 0;
        const bool is_zero = delta_zero && std::all_of(p.z.begin(), p.z.end(),
                                                       [](long zi) { return zi == 0; });
        return is_zero ? 0 : mult_half;
    };

    // Radius from the volume heuristic, grown until enough positives.
    double det_g = 1.0;
    {
        const auto l = cholesky(torus.gram);
        for (std::size_t i = 0; i < n; ++i) det_g *= (*l)(i, i) * (*l)(i, i);
    }
    const double unit_ball = std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
    const double need = static_cast<double>(count) / mult_half + 2.0;
    double radius = std::pow(2.0 * need / (unit_ball * std::sqrt(det_g)), 1.0 / n) + 1.0;

    // Cut at the norm of the count-th positive eigenvalue, closing ties, so
    // the window is a genuine truncation of the ordered spectral function.
    // The cut shell must sit strictly inside the enumeration radius, else a
    // tie partner could be lost to rounding at the boundary.
    std::vector<LatticePoint> points;
    std::size_t cut = 0;
    double cutoff = 0.0;
    bool complete = false;
    for (int round = 0; round < 64 && !complete; ++round) {
        points = lattice_enumerate(m, shift, radius);
        cut = 0;
        std::size_t positives = 0;
        while (cut < points.size() && positives < count) positives += positives_of(points[cut++]);
        if (positives >= count) {
            cutoff = points[cut - 1].norm * (1.0 + 1e-12) + 1e-300;
            while (cut < points.size() && points[cut].norm <= cutoff) ++cut;
            complete = cutoff < radius * (1.0 - 1e-9);
        }
        if (!complete) radius *= 1.3;
    }
    if (!complete) throw std::runtime_error("torus_spectrum: enumeration did not converge");

    std::vector<double> eigs;
    eigs.reserve(2 * count + mult_zero);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t p = 0; p < cut; ++p) {
        const LatticePoint& pt = points[p];
        if (n == 1) {
            eigs.push_back(pt.xi[0] >= 0.0 ? two_pi * pt.norm : -two_pi * pt.norm);
            continue;
        }
        const bool is_zero =
            delta_zero && std::all_of(pt.z.begin(), pt.z.end(), [](long zi) { return zi == 0; });
        if (is_zero) {
            eigs.insert(eigs.end(), mult_zero, 0.0);
        } else {
            eigs.insert(eigs.end(), mult_half, two_pi * pt.norm);
            eigs.insert(eigs.end(), mult_half, -two_pi * pt.norm);
        }
    }
    return canonical_window(std::move(eigs));
}

FlatTorus pullback(const FlatTorus& torus, const std::vector<long>& f) {
    const std::size_t n = torus.n;
    if (f.size() != n * n) throw std::invalid_argument("pullback: f must be n x n");
    if (integer_determinant(f, n) != 1)
        throw std::invalid_argument("pullback: f must be unimodular (det = 1)");

    Matrix fm(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fm(i, j) = static_cast<double>(f[i * n + j]);
    Matrix gram = fm.transposed() * torus.gram * fm;
    // exact symmetry for the validator, entries are products of exact values
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) gram(j, i) = gram(i, j);

    std::vector<int> delta(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        long s = 0;
        for (std::size_t i = 0; i < n; ++i) s += f[i * n + k] * torus.delta[i];
        delta[k] = static_cast<int>(((s % 2) + 2) % 2);
    }
    return make_flat_torus(std::move(gram), std::move(delta));
}

}  // namespace specflow
