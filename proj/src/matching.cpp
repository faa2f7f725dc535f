#include "specflow/matching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specflow/kernels.hpp"

namespace specflow {

AmbiguousMatchError::AmbiguousMatchError(long a, long b)
    : std::runtime_error("match_windows: ambiguous shift (" + std::to_string(a) + " and " +
                         std::to_string(b) + " both qualify); refine the step or shrink eps"),
      shift_a(a),
      shift_b(b) {}

namespace {

std::vector<double> ash_values(const SpectrumWindow& u) {
    std::vector<double> out(u.size());
    kernels::asinh_transform(u.values().data(), out.data(), u.size());
    return out;
}

// First/last positions of a (already non-decreasing) array strictly inside
// (lo, hi); empty when first > last.
std::pair<long, long> interior_positions(const std::vector<double>& ash, double lo, double hi) {
    const long n = static_cast<long>(ash.size());
    long first = 0;
    while (first < n && !(ash[static_cast<std::size_t>(first)] > lo)) ++first;
    long last = n - 1;
    while (last >= 0 && !(ash[static_cast<std::size_t>(last)] < hi)) --last;
    return {first, last};
}

}  // namespace

ShiftMatch match_windows(const SpectrumWindow& u, const SpectrumWindow& v, double eps,
                         long max_shift, MatchPolicy policy) {
    if (!(eps > 0.0)) throw std::invalid_argument("match_windows: eps must be > 0");
    if (max_shift < 0) throw std::invalid_argument("match_windows: max_shift must be >= 0");

    const std::vector<double> au = ash_values(u);
    const std::vector<double> av = ash_values(v);

    // Guard bands in each window's own labeling (positions, not Z-indices).
    long gu_first = 0, gu_last = static_cast<long>(u.size()) - 1;
    long gv_first = 0, gv_last = static_cast<long>(v.size()) - 1;
    if (policy.edge_guard) {
        std::tie(gu_first, gu_last) = interior_positions(au, au.front() + eps, au.back() - eps);
        std::tie(gv_first, gv_last) = interior_positions(av, av.front() + eps, av.back() - eps);
    }

    bool found = false;
    ShiftMatch best{};
    for (long k = -max_shift; k <= max_shift; ++k) {
        // u(j) vs v(j - k) over the index overlap, guard bands intersected
        long jlo = std::max(u.index_lo() + gu_first, v.index_lo() + k + gv_first);
        long jhi = std::min(u.index_lo() + gu_last, v.index_lo() + k + gv_last);
        if (jhi < jlo) continue;
        const std::size_t len = static_cast<std::size_t>(jhi - jlo + 1);
        const double d = kernels::sup_abs_diff(au.data() + (jlo - u.index_lo()),
                                               av.data() + (jlo - k - v.index_lo()), len);
        if (d < eps) {
            if (found) throw AmbiguousMatchError(best.shift, k);
            best = {k, d, jlo, jhi};
            found = true;
        }
    }
    if (!found) throw NoMatchError();
    return best;
}

std::vector<RearrangePair> monotone_rearrange(std::vector<RearrangePair> pairs) {
    if (pairs.empty()) return pairs;

    std::vector<RearrangePair> sorted = std::move(pairs);
    std::sort(sorted.begin(), sorted.end(),
              [](const RearrangePair& a, const RearrangePair& b) { return a.source < b.source; });

    bool all_within = true;
    std::vector<long> targets;
    targets.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i].source != sorted[i - 1].source + 1)
            throw std::invalid_argument("monotone_rearrange: sources are not a contiguous block");
        targets.push_back(sorted[i].target);
        all_within = all_within && sorted[i].within_eps;
    }
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
        throw std::invalid_argument("monotone_rearrange: targets are not distinct");

    for (std::size_t i = 0; i < sorted.size(); ++i) {
        sorted[i].target = targets[i];
        sorted[i].within_eps = all_within;
    }
    return sorted;
}

double even_cover_radius(const SpectrumWindow& u) {
    if (!u.contains(0))
        throw std::invalid_argument("even_cover_radius: window does not contain index 0");
    const double u0 = u.at(0);

    // multiplicity block around index 0, grouped against u(0)
    long block_lo = 0;
    while (block_lo - 1 >= u.index_lo() && same_eigenvalue(u.at(block_lo - 1), u0)) --block_lo;
    long block_hi = 0;
    while (block_hi + 1 <= u.index_hi() && same_eigenvalue(u.at(block_hi + 1), u0)) ++block_hi;

    if (block_lo - 1 < u.index_lo() || block_hi + 1 > u.index_hi())
        throw std::invalid_argument(
            "even_cover_radius: window too small to see both neighbor blocks");

    const double gap_below = std::asinh(u0) - std::asinh(u.at(block_lo - 1));
    const double gap_above = std::asinh(u.at(block_hi + 1)) - std::asinh(u0);
    return 0.5 * std::min(gap_below, gap_above);
}

}  // namespace specflow
