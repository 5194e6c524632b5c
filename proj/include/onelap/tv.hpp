#pragma once

#include <cstdint>
#include <vector>

#include "onelap/graph.hpp"
#include "onelap/rational.hpp"

namespace onelap {

// Rational function on the vertex set, indexed by vertex id.
using VertexFunction = std::vector<Rat>;

// Sign pattern with entries in {+1, 0, -1}. Canonical patterns are nonzero
// and have +1 as their first nonzero entry.
struct TernaryPattern {
    std::vector<std::int8_t> sign;

    bool is_canonical() const;
};

struct NodalDecomposition {
    // Connected components of the positive / negative support, each sorted,
    // ordered by smallest vertex id. Vertices outside the support land in
    // null_set.
    std::vector<std::vector<int>> pos_domains;
    std::vector<std::vector<int>> neg_domains;
    std::vector<int> null_set;
    // Degree sums over the positive support, negative support, and null set.
    std::int64_t delta_pos = 0;
    std::int64_t delta_neg = 0;
    std::int64_t delta_zero = 0;

    int r_pos() const { return static_cast<int>(pos_domains.size()); }
    int r_neg() const { return static_cast<int>(neg_domains.size()); }
};

// Sum of d_i * |x_i|; the unit sphere of this norm is the constraint set the
// eigenvalue problem lives on.
Rat weighted_norm(const Graph& g, const VertexFunction& x);

// Total variation along edges: one term |x_u - x_v| per undirected edge.
Rat tv_energy(const Graph& g, const VertexFunction& x);

NodalDecomposition nodal_decomposition(const Graph& g, const VertexFunction& x);

// Weighted-median condition |delta_pos - delta_neg| <= delta_zero. Requires
// weighted_norm(g, x) == 1 (NotOnX otherwise).
bool in_pi(const Graph& g, const VertexFunction& x);

// Collapse x to the piecewise-constant representative with value
// +-1/(delta_pos + delta_neg) on its support. Errors: ZeroVector.
VertexFunction normalize_eigenvector(const Graph& g, const VertexFunction& x);

// The function taking value sign_i / delta on the pattern's support, where
// delta is the degree sum over the support. Always lies on the unit sphere.
// Errors: AllZeroPattern.
VertexFunction pattern_to_function(const Graph& g, const TernaryPattern& p);

// Total variation of the function that is levels[a] on pos_domains[a],
// -levels[r_pos + b] on neg_domains[b], and 0 on the null set, computed from
// inter-domain edge counts alone. Errors: NonpositiveLevel, LengthMismatch.
Rat tv_energy_nodal(const Graph& g, const NodalDecomposition& dec, const std::vector<Rat>& levels);

} // namespace onelap
