#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace onelap {

// Circulation feasibility problem with integer lower/upper bounds per arc.
// `scale` records the factor by which rational data was cleared to integers;
// the solver itself only sees the integers.
struct FlowProblem {
    struct Arc {
        int from = 0;
        int to = 0;
        std::int64_t lower = 0;
        std::int64_t upper = 0;
    };

    int node_count = 0;
    std::vector<Arc> arcs;
    std::int64_t scale = 1;
};

// Returns one feasible flow per arc (lower <= flow <= upper, zero divergence
// at every node), or nullopt when none exists. Deterministic for a fixed
// problem.
std::optional<std::vector<std::int64_t>> solve_circulation(const FlowProblem& problem);

} // namespace onelap
