// Parametrized families t -> A(t) of symmetric matrices with derivative
// access, the finite-dimensional stand-ins for self-adjoint operator
// families with fixed domain.

#pragma once

#include <functional>
#include <stdexcept>

#include "specflow/matrix.hpp"
#include "specflow/spectrum_window.hpp"

namespace specflow {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    double length() const { return hi - lo; }
    bool contains(double t) const;
};

class OperatorFamily {
public:
    using Evaluator = std::function<Matrix(double)>;

    // Exact derivative supplied by the caller. Evaluators must be reentrant
    // and return the fixed dimension at every t.
    OperatorFamily(Interval interval, std::size_t dimension, Evaluator eval, Evaluator deriv);

    // Central finite-difference derivative, step h = 1e-6 * (1 + |t|)
    // (one-sided at the interval ends).
    static OperatorFamily with_fd_derivative(Interval interval, std::size_t dimension,
                                             Evaluator eval);

    Interval interval() const { return interval_; }
    std::size_t dimension() const { return dimension_; }

    Matrix operator()(double t) const;
    Matrix derivative(double t) const;

private:
    Interval interval_;
    std::size_t dimension_;
    Evaluator eval_;
    Evaluator deriv_;
};

// t -> (1-t) a0 + t a1 on [0,1], exact derivative a1 - a0.
OperatorFamily linear_family(Matrix a0, Matrix a1);

// Canonical window of the full spectrum of A(t). t must lie in the interval.
SpectrumWindow sample_spectrum(const OperatorFamily& family, double t);

}  // namespace specflow
