#include "onelap/flow.hpp"

#include <algorithm>
#include <limits>

namespace onelap {

namespace {

// Residual-graph max flow with capacity scaling. Sizes here are tiny (a few
// dozen nodes), so adjacency lists with paired reverse arcs suffice.
class MaxFlow {
  public:
    explicit MaxFlow(int nodes) : head_(nodes, -1) {}

    int add_arc(int from, int to, std::int64_t capacity) {
        int id = static_cast<int>(to_.size());
        to_.push_back(to);
        cap_.push_back(capacity);
        next_.push_back(head_[from]);
        head_[from] = id;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = id + 1;
        return id;
    }

    std::int64_t flow_on(int arc_id) const { return cap_[arc_id ^ 1]; }

    std::int64_t run(int source, int sink) {
        std::int64_t max_cap = 0;
        for (std::int64_t c : cap_) max_cap = std::max(max_cap, c);
        std::int64_t threshold = 1;
        while (threshold * 2 <= max_cap) threshold *= 2;

        std::int64_t total = 0;
        for (; threshold >= 1; threshold /= 2) {
            for (;;) {
                visited_.assign(head_.size(), 0);
                std::int64_t pushed = augment(source, sink, threshold,
                                              std::numeric_limits<std::int64_t>::max());
                if (pushed == 0) break;
                total += pushed;
            }
        }
        return total;
    }

  private:
    std::int64_t augment(int u, int sink, std::int64_t threshold, std::int64_t limit) {
        if (u == sink) return limit;
        visited_[u] = 1;
        for (int a = head_[u]; a != -1; a = next_[a]) {
            if (cap_[a] < threshold || visited_[to_[a]]) continue;
            std::int64_t pushed = augment(to_[a], sink, threshold, std::min(limit, cap_[a]));
            if (pushed > 0) {
                cap_[a] -= pushed;
                cap_[a ^ 1] += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> to_;
    std::vector<std::int64_t> cap_;
    std::vector<int> next_;
    std::vector<char> visited_;
};

} // namespace

std::optional<std::vector<std::int64_t>> solve_circulation(const FlowProblem& problem) {
    for (const auto& arc : problem.arcs) {
        if (arc.lower > arc.upper) return std::nullopt;
    }

    // Standard reduction: route each arc's mandatory `lower` units eagerly and
    // let a super source/sink repair the node imbalances this creates.
    int source = problem.node_count;
    int sink = problem.node_count + 1;
    MaxFlow flow(problem.node_count + 2);
    std::vector<std::int64_t> excess(problem.node_count, 0);
    std::vector<int> arc_ids(problem.arcs.size());
    for (std::size_t i = 0; i < problem.arcs.size(); ++i) {
        const auto& arc = problem.arcs[i];
        arc_ids[i] = flow.add_arc(arc.from, arc.to, arc.upper - arc.lower);
        excess[arc.to] += arc.lower;
        excess[arc.from] -= arc.lower;
    }
    std::int64_t required = 0;
    for (int v = 0; v < problem.node_count; ++v) {
        if (excess[v] > 0) {
            flow.add_arc(source, v, excess[v]);
            required += excess[v];
        } else if (excess[v] < 0) {
            flow.add_arc(v, sink, -excess[v]);
        }
    }
    if (flow.run(source, sink) != required) return std::nullopt;

    std::vector<std::int64_t> result(problem.arcs.size());
    for (std::size_t i = 0; i < problem.arcs.size(); ++i) {
        result[i] = problem.arcs[i].lower + flow.flow_on(arc_ids[i]);
    }
    return result;
}

} // namespace onelap
