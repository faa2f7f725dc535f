#include "specflow/operator_family.hpp"

#include <cmath>
#include <utility>

#include "specflow/eigh.hpp"

namespace specflow {

bool Interval::contains(double t) const {
    const double slack = 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi));
    return t >= lo - slack && t <= hi + slack;
}

OperatorFamily::OperatorFamily(Interval interval, std::size_t dimension, Evaluator eval,
                               Evaluator deriv)
    : interval_(interval), dimension_(dimension), eval_(std::move(eval)), deriv_(std::move(deriv)) {
    if (!(interval_.lo < interval_.hi))
        throw std::invalid_argument("OperatorFamily: degenerate interval");
    if (dimension_ == 0) throw std::invalid_argument("OperatorFamily: zero dimension");
    if (!eval_ || !deriv_) throw std::invalid_argument("OperatorFamily: missing evaluator");
}

OperatorFamily OperatorFamily::with_fd_derivative(Interval interval, std::size_t dimension,
                                                  Evaluator eval) {
    Evaluator fd = [interval, eval](double t) {
        const double h = 1e-6 * (1.0 + std::fabs(t));
        double tp = t + h, tm = t - h;
        if (tp > interval.hi) tp = t;  // one-sided at the ends
        if (tm < interval.lo) tm = t;
        if (tp == tm)
            throw std::runtime_error("finite-difference derivative: interval shorter than step");
        Matrix diff = eval(tp) - eval(tm);
        return diff * (1.0 / (tp - tm));
    };
    return OperatorFamily(interval, dimension, std::move(eval), std::move(fd));
}

Matrix OperatorFamily::operator()(double t) const {
    Matrix a = eval_(t);
    if (a.dim() != dimension_)
        throw std::runtime_error("OperatorFamily: evaluator changed dimension");
    return a;
}

Matrix OperatorFamily::derivative(double t) const {
    Matrix a = deriv_(t);
    if (a.dim() != dimension_)
        throw std::runtime_error("OperatorFamily: derivative changed dimension");
    require_symmetric(a, "OperatorFamily::derivative");
    return a;
}

OperatorFamily linear_family(Matrix a0, Matrix a1) {
    if (a0.dim() != a1.dim()) throw std::invalid_argument("linear_family: dimension mismatch");
    const std::size_t n = a0.dim();
    Matrix diff = a1 - a0;
    auto eval = [a0 = std::move(a0), a1 = std::move(a1)](double t) {
        return a0 * (1.0 - t) + a1 * t;
    };
    auto deriv = [diff = std::move(diff)](double) { return diff; };
    return OperatorFamily({0.0, 1.0}, n, std::move(eval), std::move(deriv));
}

SpectrumWindow sample_spectrum(const OperatorFamily& family, double t) {
    if (!family.interval().contains(t))
        throw std::invalid_argument("sample_spectrum: t outside the family interval");
    return canonical_window(eigh_values(family(t)));
}

}  // namespace specflow
