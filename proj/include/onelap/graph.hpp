#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "onelap/error.hpp"

namespace onelap {

// Simple undirected graph, immutable once built. Edges are stored with the
// canonical orientation u < v and sorted lexicographically; every vertex has
// degree >= 1.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;
    // Per vertex: (neighbor, edge index), sorted by neighbor.
    std::vector<std::vector<std::pair<int, int>>> adjacency;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int total_degree() const { return 2 * edge_count(); }
};

// Validates and canonicalizes an edge list. Errors: VertexOutOfRange,
// SelfLoop, DuplicateEdge (also for a pair given in both orientations),
// IsolatedVertex.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

struct ComponentLabeling {
    std::vector<int> component_id; // per vertex, ids 0..count-1 by smallest member
    int count = 0;
};

ComponentLabeling connected_components(const Graph& g);

Graph path_graph(int n);     // n >= 2
Graph cycle_graph(int n);    // n >= 3
Graph complete_graph(int n); // n >= 3
Graph star_graph(int n);     // n >= 2, hub is vertex 0
Graph petersen_graph();

// Text format: optional '#' comment lines, then "n m", then m lines "u v"
// with 0-indexed endpoints.
Graph parse_edge_list(std::string_view text);

// Canonical serialization: no comments, edges in sorted order.
std::string serialize_edge_list(const Graph& g);

} // namespace onelap
