#include "specflow/matrix.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace specflow {

Matrix::Matrix(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n)
        throw std::invalid_argument("Matrix: data size does not match dimension");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
    if (x.size() != n_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> Matrix::apply_transposed(std::span<const double> x) const {
    if (x.size() != n_) throw std::invalid_argument("Matrix::apply_transposed: dimension mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, j) * x[i];
        y[j] = s;
    }
    return y;
}

Matrix Matrix::transposed() const {
    Matrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

bool Matrix::is_symmetric(double rel_tol) const {
    const double tol = rel_tol * std::max(1.0, max_abs());
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

void require_symmetric(const Matrix& m, const char* what, double rel_tol) {
    if (!m.is_symmetric(rel_tol))
        throw std::invalid_argument(std::string(what) + ": matrix is not symmetric");
}

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Deterministic start vector for power iterations.
std::vector<double> start_vector(std::size_t n) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    double nv = norm2(v);
    if (nv == 0.0) v[0] = nv = 1.0;
    for (double& x : v) x /= nv;
    return v;
}

constexpr double kPowerRelTol = 1e-10;
constexpr int kPowerMaxIter = 200000;

// Largest eigenvalue of the PSD operator x -> op(x) with Rayleigh-quotient
// stagnation as stopping rule.
template <typename Op>
double psd_power_iteration(std::size_t n, Op&& op) {
    std::vector<double> v = start_vector(n);
    double q_prev = -1.0;
    for (int it = 0; it < kPowerMaxIter; ++it) {
        std::vector<double> w = op(v);
        double q = 0.0;
        for (std::size_t i = 0; i < n; ++i) q += v[i] * w[i];
        double nw = norm2(w);
        if (nw == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
        if (q_prev >= 0.0 && std::fabs(q - q_prev) <= kPowerRelTol * std::max(1e-300, q)) return q;
        q_prev = q;
    }
    return q_prev;
}

}  // namespace

double spectral_norm(const Matrix& a) {
    const std::size_t n = a.dim();
    if (n == 0) return 0.0;
    double q = psd_power_iteration(n, [&](std::span<const double> v) {
        return a.apply_transposed(a.apply(v));
    });
    return std::sqrt(std::max(0.0, q));
}

std::pair<double, double> symmetric_eig_bounds(const Matrix& a) {
    const std::size_t n = a.dim();
    if (n == 0) return {0.0, 0.0};
    // rho >= max|lambda|; shift so both A + rho I and rho I - A are PSD.
    const double rho = spectral_norm(a);
    double hi = psd_power_iteration(n, [&](std::span<const double> v) {
        std::vector<double> w = a.apply(v);
        for (std::size_t i = 0; i < n; ++i) w[i] += rho * v[i];
        return w;
    });
    double lo = psd_power_iteration(n, [&](std::span<const double> v) {
        std::vector<double> w = a.apply(v);
        for (std::size_t i = 0; i < n; ++i) w[i] = rho * v[i] - w[i];
        return w;
    });
    return {rho - lo, hi - rho};
}

}  // namespace specflow
