#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stpgc/graph.hpp"
#include "support.hpp"

using namespace stpgc;
using namespace test_support;

TEST_CASE("edge insertion and deletion keep counts and queries consistent") {
    WorkingGraph g(4);
    CHECK(g.original_nodes() == 4);
    CHECK(g.alive_nodes() == 4);
    CHECK(g.alive_edges() == 0);

    g.insert_edge(0, 1);
    g.insert_edge(1, 2);
    CHECK(g.alive_edges() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<NodeId>{0, 2});

    g.delete_edge(1, 0);
    CHECK(g.alive_edges() == 1);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(1) == 1);
}

TEST_CASE("invalid mutations throw") {
    WorkingGraph g(3);
    g.insert_edge(0, 1);
    CHECK_THROWS_AS(g.insert_edge(0, 0), GraphError);   // self-loop
    CHECK_THROWS_AS(g.insert_edge(1, 0), GraphError);   // duplicate
    CHECK_THROWS_AS(g.delete_edge(0, 2), GraphError);   // missing
    CHECK_THROWS_AS(g.insert_edge(0, 3), GraphError);   // out of range
    g.kill_node(2);
    CHECK_THROWS_AS(g.insert_edge(0, 2), GraphError);   // dead endpoint
    CHECK_THROWS_AS(g.neighbors(2), GraphError);
    CHECK_THROWS_AS(g.kill_node(2), GraphError);
}

TEST_CASE("kill_node detaches the node everywhere") {
    WorkingGraph g = star_graph(4);  // center 0, leaves 1..4
    CHECK(g.degree(0) == 4);
    g.kill_node(1);
    CHECK(g.alive_nodes() == 4);
    CHECK(g.alive_edges() == 3);
    CHECK(g.degree(0) == 3);
    CHECK_FALSE(g.is_alive(1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.neighbors(0) == std::vector<NodeId>{2, 3, 4});
}

TEST_CASE("lazy deletion stays correct through heavy tombstoning") {
    // kill most of a clique one node at a time; every survivor's view must
    // stay exact regardless of when purges trigger
    const int n = 32;
    WorkingGraph g = complete_graph(n);
    for (int u = 0; u < n - 4; ++u) {
        g.kill_node(u);
        int alive = n - 1 - u;
        CHECK(g.alive_nodes() == alive);
        CHECK(g.alive_edges() == static_cast<long long>(alive) * (alive - 1) / 2);
        CHECK(g.degree(n - 1) == alive - 1);
    }
    CHECK(g.neighbors(n - 1) == std::vector<NodeId>{n - 4, n - 3, n - 2});
}

TEST_CASE("alive_edge_list is sorted and deduplicated") {
    WorkingGraph g = make_graph(5, {{3, 1}, {0, 4}, {2, 0}, {1, 0}});
    auto edges = g.alive_edge_list();
    std::vector<std::pair<NodeId, NodeId>> want{{0, 1}, {0, 2}, {0, 4}, {1, 3}};
    CHECK(edges == want);
    g.kill_node(0);
    want = {{1, 3}};
    CHECK(g.alive_edge_list() == want);
}

TEST_CASE("supernode merge moves whole member lists") {
    SupernodeMap map(5);
    CHECK(map.supernode_of(3) == 3);
    map.merge(3, 1);
    map.merge(1, 0);
    CHECK(map.supernode_of(3) == 0);
    CHECK(map.supernode_of(1) == 0);
    CHECK(map.supernode_of(4) == 4);
    auto members = map.members(0);
    std::sort(members.begin(), members.end());
    CHECK(members == std::vector<NodeId>{0, 1, 3});
    CHECK(map.members(1).empty());
    CHECK_THROWS_AS(map.merge(2, 2), GraphError);
}

TEST_CASE("collapse_node removes the node and records the merge") {
    WorkingGraph g = complete_graph(3);
    SupernodeMap map(3);
    collapse_node(g, map, 2, 0);
    CHECK_FALSE(g.is_alive(2));
    CHECK(map.supernode_of(2) == 0);
    CHECK(g.alive_edges() == 1);
}

TEST_CASE("edge neighborhood helpers") {
    // bowtie: triangles {0,1,2} and {2,3,4} sharing node 2
    WorkingGraph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(common_neighbors(g, 0, 1) == std::vector<NodeId>{2});
    CHECK(common_neighbors(g, 0, 3) == std::vector<NodeId>{2});  // no edge needed
    CHECK(common_neighbors(g, 0, 4) == std::vector<NodeId>{2});
    CHECK(open_edge_neighborhood(g, 1, 2) == std::vector<NodeId>{0});
    CHECK(closed_edge_neighborhood(g, 1, 2) == std::vector<NodeId>{0, 1, 2});
    CHECK_THROWS_AS(open_edge_neighborhood(g, 0, 3), GraphError);
}

TEST_CASE("common neighbors match a brute-force scan on random graphs") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        WorkingGraph g = erdos_renyi(30, 0.2, seed);
        for (NodeId x = 0; x < 30; ++x)
            for (NodeId y = x + 1; y < 30; ++y) {
                std::vector<NodeId> want;
                for (NodeId w = 0; w < 30; ++w)
                    if (w != x && w != y && g.has_edge(w, x) && g.has_edge(w, y))
                        want.push_back(w);
                CHECK(common_neighbors(g, x, y) == want);
            }
    }
}

TEST_CASE("attributed data accessors") {
    AttributedData a;
    CHECK_FALSE(a.has_features());
    CHECK_FALSE(a.has_labels());
    CHECK(a.label_of(0) == -1);

    a.dim = 2;
    a.features = {1.0, 2.0, 3.0, 4.0};
    a.labels = {7, -1};
    CHECK(a.has_features());
    CHECK(a.has_labels());
    CHECK(a.label_of(0) == 7);
    CHECK(a.label_of(1) == -1);
    CHECK(a.feature_row(1)[0] == 3.0);
    CHECK(a.feature_row(1)[1] == 4.0);
}
