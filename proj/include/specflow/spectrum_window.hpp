// Finite, index-anchored truncations of ordered spectral functions.
//
// A spectrum window holds a non-decreasing run of eigenvalues (repeated per
// multiplicity) covering a contiguous block of integer indices. Canonical
// windows anchor index 0 at the smallest eigenvalue >= 0, so negative indices
// hold exactly the negative eigenvalues. The integer shift action relabels
// indices without touching values; the arsinh sup-metric compares windows
// index by index, and its shift-quotient compares them up to enumeration.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"

namespace specflow {

// Multiplicity grouping: eigenvalues this close count as one spectral value.
// Relative 1e-9, scaled by max(1, |lambda|) — the eigensolver accuracy budget.
bool same_eigenvalue(double a, double b);

class SpectrumWindow {
public:
    // values must be non-decreasing and non-empty; indices covered are
    // [index_lo, index_lo + values.size() - 1].
    SpectrumWindow(long index_lo, std::vector<double> values);

    long index_lo() const { return index_lo_; }
    long index_hi() const { return index_lo_ + static_cast<long>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }

    bool contains(long j) const { return j >= index_lo() && j <= index_hi(); }

    // Value at Z-index j; throws std::out_of_range outside the window.
    double at(long j) const;

    std::span<const double> values() const { return values_; }

    bool operator==(const SpectrumWindow& other) const = default;

private:
    long index_lo_ = 0;
    std::vector<double> values_;
};

// Sorts the eigenvalues and anchors index 0 at the smallest value >= 0.
// All-negative input yields index_hi == -1; all-nonnegative yields
// index_lo == 0. Throws std::invalid_argument on empty or NaN input.
SpectrumWindow canonical_window(std::vector<double> eigs);

// The shift action: values unchanged, the value formerly at index j moves to
// index j - k, i.e. shift_window(u, k) at j equals u at j + k.
SpectrumWindow shift_window(const SpectrumWindow& u, long k);

// Sup over shared indices of |arsinh u(j) - arsinh v(j)|. The windows must
// cover the identical index range; align them first (see quotient_distance).
double arsinh_distance(const SpectrumWindow& u, const SpectrumWindow& v);

struct ConfDistance {
    long shift = 0;        // minimizing k: v best matches shift_window(u, k)
    double distance = 0;   // restricted arsinh distance at that shift; may be infinity
    bool finite() const;
};

// Shift-quotient distance: minimizes the arsinh distance of u against v
// over relabelings by k, |k| <= max_shift, each restricted to the index
// overlap. Overlaps shorter than min_overlap are infeasible (0 picks the
// default, half the shorter window); if no shift is feasible the distance is
// the infinity sentinel. Ties resolve to the smallest |k|, positive first.
ConfDistance quotient_distance(const SpectrumWindow& u, const SpectrumWindow& v,
                               long max_shift, std::size_t min_overlap = 0);

// The contiguous run of values lying in [a, b], multiplicities preserved.
// Requires a <= b; an empty result is fine.
std::vector<double> spectral_part(const SpectrumWindow& u, double a, double b);

// JSON form {"index_lo": int, "values": [float]}; round-trips doubles exactly.
nlohmann::json window_to_json(const SpectrumWindow& u);
SpectrumWindow window_from_json(const nlohmann::json& j);

}  // namespace specflow
