#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "onelap/graph.hpp"
#include "onelap/spectrum.hpp"
#include "onelap/tv.hpp"

namespace onelap {

struct Cut {
    std::vector<int> subset; // sorted, nonempty, proper
    std::int64_t boundary_size = 0;
    std::int64_t vol_s = 0;
    std::int64_t vol_sbar = 0;
    Rat ratio; // boundary_size / min(vol_s, vol_sbar)
};

// Exact isoperimetric constant by scanning all 2^(n-1) subsets containing
// vertex 0. Ties go to the lexicographically smallest subset bitmask. Errors:
// Disconnected, TooLarge (n > max_n).
Cut cheeger_exact(const Graph& g, int max_n = 24, int threads = 1);

struct PiMinimum {
    Rat mu;
    TernaryPattern pattern;
};

// Minimum total variation over canonical pattern functions satisfying the
// weighted-median condition; equals the second eigenvalue for connected
// graphs. Errors: Disconnected, TooLarge.
PiMinimum mu2_via_pi_min(const Graph& g, const EnumConfig& config = {});

// Best threshold cut of y: subsets {i : y_i > t} for the n-1 candidate
// thresholds, scanned deterministically. Errors: ConstantVector,
// LengthMismatch.
Cut sweep_cut(const Graph& g, const VertexFunction& y);
Cut sweep_cut(const Graph& g, const std::vector<double>& y);

// (2 / total degree, (n-2) / (n-1)): every eigenvalue strictly between 0 and
// 1 lies in this closed interval. Errors: Disconnected, TooSmall (n < 3).
std::pair<Rat, Rat> eigenvalue_range_bound(const Graph& g);

// 1 - 1/(2c) where c is the common degree sum of the two groups. Requires
// disjoint nonempty groups of equal volume with at least one edge inside one
// group. Errors: HypothesisViolated.
Rat group_upper_bound(const Graph& g, const std::vector<int>& group_a,
                      const std::vector<int>& group_b);

} // namespace onelap
