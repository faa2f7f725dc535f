// Dense square matrices with the handful of operations the spectral
// machinery needs. Row-major, value semantics.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace specflow {

class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    Matrix(std::size_t n, std::vector<double> data);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<double>& d);

    std::size_t dim() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }

    Matrix operator*(const Matrix& rhs) const;

    std::vector<double> apply(std::span<const double> x) const;
    std::vector<double> apply_transposed(std::span<const double> x) const;

    Matrix transposed() const;

    double max_abs() const;

    // |a_ij - a_ji| <= tol * max(1, max_abs) for all i,j
    bool is_symmetric(double rel_tol = 1e-12) const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

// Throws std::invalid_argument unless m.is_symmetric(rel_tol).
void require_symmetric(const Matrix& m, const char* what, double rel_tol = 1e-12);

// Largest singular value via power iteration on AᵀA, relative tolerance 1e-10.
double spectral_norm(const Matrix& a);

// Extreme eigenvalues of a symmetric matrix by power iteration (largest by
// magnitude first, then the spectrum edge opposite to it via shifting).
// Returns {lambda_min, lambda_max}.
std::pair<double, double> symmetric_eig_bounds(const Matrix& a);

}  // namespace specflow
