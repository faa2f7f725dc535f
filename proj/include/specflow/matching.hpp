// Alignment of nearby spectrum windows by a unique integer shift.
//
// A shift k qualifies when every compared index agrees within eps in arsinh
// scale; the comparison runs over an interior guard band by default, since
// indices near the ends of a truncated window can disagree purely because
// the truncation cut differently. Zero or several qualifying shifts are
// errors, not choices: silent tie-breaking would corrupt spectral flow.

#pragma once

#include <stdexcept>
#include <vector>

#include "specflow/spectrum_window.hpp"

namespace specflow {

struct ShiftMatch {
    long shift = 0;            // v agrees with shift_window(u, shift)
    double certified_sup = 0;  // sup arsinh distance over the matched range
    long matched_lo = 0;       // matched indices (in u's labeling), contiguous
    long matched_hi = 0;
};

struct NoMatchError : std::runtime_error {
    NoMatchError() : std::runtime_error("match_windows: no shift qualifies") {}
};

struct AmbiguousMatchError : std::runtime_error {
    long shift_a, shift_b;
    AmbiguousMatchError(long a, long b);
};

struct MatchPolicy {
    // Restrict the comparison to indices whose arsinh values sit more than
    // eps inside both windows' arsinh ranges. Disable only for windows that
    // are complete spectra (nothing truncated away), e.g. finite matrices.
    bool edge_guard = true;
};

// Finds the unique |k| <= max_shift under which the windows agree within eps
// over the guard band. Throws NoMatchError / AmbiguousMatchError; eps <= 0 or
// max_shift < 0 is std::invalid_argument.
ShiftMatch match_windows(const SpectrumWindow& u, const SpectrumWindow& v, double eps,
                         long max_shift, MatchPolicy policy = {});

struct RearrangePair {
    long source = 0;
    long target = 0;
    bool within_eps = true;
};

// Replaces a bijection from a contiguous source block onto a target set by
// the unique increasing bijection with the same image (the swap argument:
// sorting target indices against monotone values preserves the eps band —
// callers re-verify against values). Non-bijective input or a non-contiguous
// source block throws std::invalid_argument. Output within_eps flags carry
// the conjunction of the input flags.
std::vector<RearrangePair> monotone_rearrange(std::vector<RearrangePair> pairs);

// Largest eps (halved for disjointness) such that the eps-intervals around
// the arsinh values of the index-0 multiplicity block and its two neighbor
// blocks are pairwise disjoint. Requires the window to contain index 0 plus
// at least one value strictly below u(0) and one strictly above; otherwise
// std::invalid_argument.
double even_cover_radius(const SpectrumWindow& u);

}  // namespace specflow
