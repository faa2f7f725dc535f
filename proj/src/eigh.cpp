#include "specflow/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace specflow {

namespace {

// Householder reduction of a symmetric matrix (stored in z) to tridiagonal
// form. d receives the diagonal, e the subdiagonal in e[1..n-1]. When
// accumulate is true, z is overwritten with the orthogonal transform Q so
// that Qᵀ A Q is tridiagonal; otherwise z is scratch.
void tridiagonalize(std::vector<double>& z, std::size_t n, std::vector<double>& d,
                    std::vector<double>& e, bool accumulate) {
    auto a = [&](std::size_t i, std::size_t j) -> double& { return z[i * n + j]; };

    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (std::size_t k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j <= l; ++j) {
                    if (accumulate) a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (std::size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (std::size_t k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (accumulate) {
            if (d[i] != 0.0) {
                for (std::size_t j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (std::size_t k = 0; k < i; ++k) g += a(i, k) * a(k, j);
                    for (std::size_t k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
                }
            }
            d[i] = a(i, i);
            a(i, i) = 1.0;
            for (std::size_t j = 0; j < i; ++j) a(j, i) = a(i, j) = 0.0;
        } else {
            d[i] = a(i, i);
        }
    }
}

// Implicit-shift QL on the tridiagonal (d, e). When z is non-null its columns
// are rotated along, producing the eigenvectors of the original matrix.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::size_t n,
                 std::vector<double>* z) {
    constexpr int kMaxSweeps = 50;
    const double eps = std::numeric_limits<double>::epsilon();

    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxSweeps)
                    throw std::runtime_error("eigh: QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                std::size_t i = m;
                while (i-- > l) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    e[i + 1] = r = std::hypot(f, g);
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (std::size_t k = 0; k < n; ++k) {
                            f = (*z)[k * n + i + 1];
                            (*z)[k * n + i + 1] = s * (*z)[k * n + i] + c * f;
                            (*z)[k * n + i] = c * (*z)[k * n + i] - s * f;
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

void sort_ascending(std::vector<double>& d, std::size_t n, std::vector<double>* z) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    std::vector<double> ds(n);
    for (std::size_t k = 0; k < n; ++k) ds[k] = d[order[k]];
    d = std::move(ds);
    if (z) {
        std::vector<double> zs(n * n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t row = 0; row < n; ++row) zs[row * n + k] = (*z)[row * n + order[k]];
        *z = std::move(zs);
    }
}

}  // namespace

EighResult eigh(const Matrix& a) {
    require_symmetric(a, "eigh");
    const std::size_t n = a.dim();
    if (n == 0) return {{}, Matrix(0)};

    std::vector<double> z(a.data().begin(), a.data().end());
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = z[0];
        z[0] = 1.0;
    } else {
        tridiagonalize(z, n, d, e, /*accumulate=*/true);
        ql_implicit(d, e, n, &z);
    }
    sort_ascending(d, n, &z);
    return {std::move(d), Matrix(n, std::move(z))};
}

std::vector<double> eigh_values(const Matrix& a) {
    require_symmetric(a, "eigh_values");
    const std::size_t n = a.dim();
    if (n == 0) return {};

    std::vector<double> z(a.data().begin(), a.data().end());
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = z[0];
    } else {
        tridiagonalize(z, n, d, e, /*accumulate=*/false);
        ql_implicit(d, e, n, nullptr);
    }
    sort_ascending(d, n, nullptr);
    return d;
}

}  // namespace specflow
