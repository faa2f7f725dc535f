#include "specflow/spectrum_window.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specflow/kernels.hpp"

namespace specflow {

bool same_eigenvalue(double a, double b) {
    return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

SpectrumWindow::SpectrumWindow(long index_lo, std::vector<double> values)
    : index_lo_(index_lo), values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("SpectrumWindow: empty value list");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (std::isnan(values_[i])) throw std::invalid_argument("SpectrumWindow: NaN value");
        if (i > 0 && values_[i] < values_[i - 1])
            throw std::invalid_argument("SpectrumWindow: values not non-decreasing");
    }
}

double SpectrumWindow::at(long j) const {
    if (!contains(j)) throw std::out_of_range("SpectrumWindow::at: index outside window");
    return values_[static_cast<std::size_t>(j - index_lo_)];
}

SpectrumWindow canonical_window(std::vector<double> eigs) {
    if (eigs.empty()) throw std::invalid_argument("canonical_window: empty spectrum");
    std::sort(eigs.begin(), eigs.end());
    if (std::isnan(eigs.back())) throw std::invalid_argument("canonical_window: NaN eigenvalue");
    // index 0 goes to the first value >= 0 (an exact 0 anchors at 0)
    const auto first_nonneg = std::lower_bound(eigs.begin(), eigs.end(), 0.0);
    const long negatives = static_cast<long>(first_nonneg - eigs.begin());
    return SpectrumWindow(-negatives, std::move(eigs));
}

SpectrumWindow shift_window(const SpectrumWindow& u, long k) {
    return SpectrumWindow(u.index_lo() - k, std::vector<double>(u.values().begin(), u.values().end()));
}

namespace {

std::vector<double> ash_values(const SpectrumWindow& u) {
    std::vector<double> out(u.size());
    kernels::asinh_transform(u.values().data(), out.data(), u.size());
    return out;
}

}  // namespace

double arsinh_distance(const SpectrumWindow& u, const SpectrumWindow& v) {
    if (u.index_lo() != v.index_lo() || u.size() != v.size())
        throw std::invalid_argument("arsinh_distance: index ranges differ; align windows first");
    const std::vector<double> au = ash_values(u);
    const std::vector<double> av = ash_values(v);
    return kernels::sup_abs_diff(au.data(), av.data(), au.size());
}

bool ConfDistance::finite() const { return std::isfinite(distance); }

ConfDistance quotient_distance(const SpectrumWindow& u, const SpectrumWindow& v,
                               long max_shift, std::size_t min_overlap) {
    if (max_shift < 0) throw std::invalid_argument("quotient_distance: max_shift must be >= 0");
    if (min_overlap == 0) min_overlap = std::max<std::size_t>(1, std::min(u.size(), v.size()) / 2);

    const std::vector<double> au = ash_values(u);
    const std::vector<double> av = ash_values(v);

    ConfDistance best{0, std::numeric_limits<double>::infinity()};
    // 0, +1, -1, +2, -2, ...: strict improvement only, so ties keep small |k|.
    for (long step = 0; step <= 2 * max_shift; ++step) {
        const long k = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
        // v is compared against shift_window(u, k): u(j) vs v(j - k)
        const long jlo = std::max(u.index_lo(), v.index_lo() + k);
        const long jhi = std::min(u.index_hi(), v.index_hi() + k);
        if (jhi < jlo) continue;
        const std::size_t len = static_cast<std::size_t>(jhi - jlo + 1);
        if (len < min_overlap) continue;
        const double d = kernels::sup_abs_diff(au.data() + (jlo - u.index_lo()),
                                               av.data() + (jlo - k - v.index_lo()), len);
        if (d < best.distance) best = {k, d};
    }
    return best;
}

std::vector<double> spectral_part(const SpectrumWindow& u, double a, double b) {
    if (!(a <= b)) throw std::invalid_argument("spectral_part: interval endpoints out of order");
    const auto vals = u.values();
    const auto lo = std::lower_bound(vals.begin(), vals.end(), a);
    const auto hi = std::upper_bound(vals.begin(), vals.end(), b);
    if (hi <= lo) return {};
    return std::vector<double>(lo, hi);
}

nlohmann::json window_to_json(const SpectrumWindow& u) {
    return nlohmann::json{{"index_lo", u.index_lo()},
                          {"values", std::vector<double>(u.values().begin(), u.values().end())}};
}

SpectrumWindow window_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("index_lo") || !j.contains("values"))
        throw std::invalid_argument("window_from_json: expected {index_lo, values}");
    for (const auto& item : j.items())
        if (item.key() != "index_lo" && item.key() != "values")
            throw std::invalid_argument("window_from_json: unknown key: " + item.key());
    if (!j["index_lo"].is_number_integer())
        throw std::invalid_argument("window_from_json: index_lo must be an integer");
    return SpectrumWindow(j["index_lo"].get<long>(), j["values"].get<std::vector<double>>());
}

}  // namespace specflow
