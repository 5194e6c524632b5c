#include "onelap/graph.hpp"

#include <algorithm>
#include <sstream>

namespace onelap {

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n <= 0) {
        throw Error(ErrorCode::TooSmall, "graph needs at least one vertex");
    }
    Graph g;
    g.n = n;
    g.edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") with n = " +
                            std::to_string(n));
        }
        if (u == v) {
            throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (std::size_t i = 1; i < g.edges.size(); ++i) {
        if (g.edges[i] == g.edges[i - 1]) {
            throw Error(ErrorCode::DuplicateEdge,
                        "edge (" + std::to_string(g.edges[i].first) + ", " +
                            std::to_string(g.edges[i].second) + ")");
        }
    }

    g.degree.assign(n, 0);
    g.adjacency.assign(n, {});
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        g.degree[u]++;
        g.degree[v]++;
        g.adjacency[u].emplace_back(v, e);
        g.adjacency[v].emplace_back(u, e);
    }
    for (int i = 0; i < n; ++i) {
        if (g.degree[i] == 0) {
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(i));
        }
        std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
    }
    return g;
}

ComponentLabeling connected_components(const Graph& g) {
    ComponentLabeling labeling;
    labeling.component_id.assign(g.n, -1);
    std::vector<int> stack;
    for (int start = 0; start < g.n; ++start) {
        if (labeling.component_id[start] != -1) continue;
        int id = labeling.count++;
        stack.push_back(start);
        labeling.component_id[start] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, e] : g.adjacency[u]) {
                (void)e;
                if (labeling.component_id[v] == -1) {
                    labeling.component_id[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return labeling;
}

Graph path_graph(int n) {
    if (n < 2) throw Error(ErrorCode::TooSmall, "path needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorCode::TooSmall, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return build_graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 3) throw Error(ErrorCode::TooSmall, "complete graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph star_graph(int n) {
    if (n < 2) throw Error(ErrorCode::TooSmall, "star needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return build_graph(n, edges);
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                            {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        rows.push_back(line);
    }
    if (rows.empty()) {
        throw Error(ErrorCode::ParseError, "missing header line");
    }
    auto parse_ints = [](const std::string& row, const char* what) {
        std::istringstream ls(row);
        long long a, b;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw Error(ErrorCode::ParseError, std::string(what) + " line '" + row + "'");
        }
        return std::pair<long long, long long>{a, b};
    };
    auto [n, m] = parse_ints(rows[0], "header");
    if (n < 0 || m < 0 || static_cast<long long>(rows.size()) != m + 1) {
        throw Error(ErrorCode::ParseError,
                    "expected " + std::to_string(m) + " edge lines, found " +
                        std::to_string(rows.size() - 1));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 1; i <= m; ++i) {
        auto [u, v] = parse_ints(rows[static_cast<std::size_t>(i)], "edge");
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorCode::VertexOutOfRange, "edge line '" + rows[static_cast<std::size_t>(i)] + "'");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return build_graph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

} // namespace onelap
