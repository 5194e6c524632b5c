#include <utility>
#include <vector>

#include "doctest.h"
#include "onelap/graph.hpp"

using onelap::build_graph;
using onelap::ErrorCode;
using onelap::Graph;

namespace {

template <typename F>
bool throws_with(ErrorCode code, F&& fn) {
    try {
        fn();
    } catch (const onelap::Error& e) {
        return e.code() == code;
    }
    return false;
}

using EdgeList = std::vector<std::pair<int, int>>;

} // namespace

TEST_CASE("build_graph canonicalizes orientation and order") {
    Graph g = build_graph(4, {{3, 2}, {1, 0}, {2, 1}});
    CHECK(g.edges == EdgeList{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.degree == std::vector<int>{1, 2, 2, 1});
    CHECK(g.edge_count() == 3);
    CHECK(g.total_degree() == 6);
    // adjacency rows carry (neighbor, edge index) sorted by neighbor
    CHECK(g.adjacency[1] == std::vector<std::pair<int, int>>{{0, 0}, {2, 1}});
    CHECK(g.adjacency[2] == std::vector<std::pair<int, int>>{{1, 1}, {3, 2}});
}

TEST_CASE("build_graph validation") {
    CHECK(throws_with(ErrorCode::VertexOutOfRange, [] { build_graph(3, {{0, 3}, {0, 1}, {1, 2}}); }));
    CHECK(throws_with(ErrorCode::VertexOutOfRange, [] { build_graph(3, {{-1, 2}, {0, 1}, {1, 2}}); }));
    CHECK(throws_with(ErrorCode::SelfLoop, [] { build_graph(3, {{1, 1}, {0, 1}, {1, 2}}); }));
    CHECK(throws_with(ErrorCode::DuplicateEdge, [] { build_graph(3, {{0, 1}, {0, 1}, {1, 2}}); }));
    // duplicate hidden by opposite orientation
    CHECK(throws_with(ErrorCode::DuplicateEdge, [] { build_graph(3, {{0, 1}, {1, 0}, {1, 2}}); }));
    CHECK(throws_with(ErrorCode::IsolatedVertex, [] { build_graph(3, {{0, 1}}); }));
    CHECK(throws_with(ErrorCode::IsolatedVertex, [] { build_graph(1, {}); }));
}

TEST_CASE("generator shapes") {
    Graph p4 = onelap::path_graph(4);
    CHECK(p4.edges == EdgeList{{0, 1}, {1, 2}, {2, 3}});

    Graph c4 = onelap::cycle_graph(4);
    CHECK(c4.edges == EdgeList{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    Graph k4 = onelap::complete_graph(4);
    CHECK(k4.edge_count() == 6);
    for (int d : k4.degree)
        CHECK(d == 3);

    Graph s5 = onelap::star_graph(5);
    CHECK(s5.edges == EdgeList{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(s5.degree[0] == 4);

    CHECK(throws_with(ErrorCode::TooSmall, [] { onelap::path_graph(1); }));
    CHECK(throws_with(ErrorCode::TooSmall, [] { onelap::cycle_graph(2); }));
    CHECK(throws_with(ErrorCode::TooSmall, [] { onelap::complete_graph(2); }));
    CHECK(throws_with(ErrorCode::TooSmall, [] { onelap::star_graph(1); }));
}

TEST_CASE("petersen graph is the 3-regular 10-vertex standard one") {
    Graph g = onelap::petersen_graph();
    CHECK(g.n == 10);
    CHECK(g.edge_count() == 15);
    for (int d : g.degree)
        CHECK(d == 3);
    EdgeList expected = {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                         {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
    CHECK(g.edges == expected);
}

TEST_CASE("connected components are labeled by smallest member") {
    Graph two = build_graph(6, {{0, 1}, {2, 3}, {2, 4}, {3, 4}, {1, 5}});
    auto lab = onelap::connected_components(two);
    CHECK(lab.count == 2);
    CHECK(lab.component_id == std::vector<int>{0, 0, 1, 1, 1, 0});

    auto one = onelap::connected_components(onelap::cycle_graph(5));
    CHECK(one.count == 1);
}

TEST_CASE("edge list text round-trip") {
    const char* text = "# weighted by nothing\n4 3\n2 3\n0 1\n1 2\n";
    Graph g = onelap::parse_edge_list(text);
    CHECK(g.n == 4);
    CHECK(g.edges == EdgeList{{0, 1}, {1, 2}, {2, 3}});
    CHECK(onelap::serialize_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n");
    Graph again = onelap::parse_edge_list(onelap::serialize_edge_list(g));
    CHECK(again.edges == g.edges);
}

TEST_CASE("edge list parse errors") {
    CHECK(throws_with(ErrorCode::ParseError, [] { onelap::parse_edge_list(""); }));
    CHECK(throws_with(ErrorCode::ParseError, [] { onelap::parse_edge_list("2\n0 1\n"); }));
    CHECK(throws_with(ErrorCode::ParseError, [] { onelap::parse_edge_list("2 1\n0\n"); }));
    CHECK(throws_with(ErrorCode::ParseError, [] { onelap::parse_edge_list("2 2\n0 1\n"); }));
    CHECK(throws_with(ErrorCode::ParseError, [] { onelap::parse_edge_list("2 1\n0 one\n"); }));
    CHECK(throws_with(ErrorCode::VertexOutOfRange, [] { onelap::parse_edge_list("2 1\n0 2\n"); }));
}
