#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "stpgc/graph.hpp"
#include "stpgc/topology.hpp"

namespace test_support {

using stpgc::NodeId;
using stpgc::WorkingGraph;

inline WorkingGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    WorkingGraph g(n);
    for (auto [a, b] : edges) g.insert_edge(a, b);
    return g;
}

inline WorkingGraph path_graph(int n) {
    WorkingGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.insert_edge(i, i + 1);
    return g;
}

inline WorkingGraph cycle_graph(int n) {
    WorkingGraph g = path_graph(n);
    g.insert_edge(n - 1, 0);
    return g;
}

inline WorkingGraph complete_graph(int n) {
    WorkingGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.insert_edge(i, j);
    return g;
}

inline WorkingGraph star_graph(int leaves) {  // node 0 is the center
    WorkingGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.insert_edge(0, i);
    return g;
}

inline std::vector<std::pair<int, int>> erdos_renyi_edges(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) edges.emplace_back(i, j);
    return edges;
}

inline WorkingGraph erdos_renyi(int n, double p, uint64_t seed) {
    return make_graph(n, erdos_renyi_edges(n, p, seed));
}

// Preferential attachment: each new node attaches to `m` distinct existing
// nodes picked proportionally to degree (via the repeated-endpoint trick).
inline std::vector<std::pair<int, int>> barabasi_albert_edges(int n, int m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> endpoints;
    int m0 = m + 1;  // initial clique
    for (int i = 0; i < m0 && i < n; ++i)
        for (int j = i + 1; j < m0 && j < n; ++j) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    for (int v = m0; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < m)
            targets.insert(endpoints[rng() % endpoints.size()]);
        for (int t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return edges;
}

inline WorkingGraph barabasi_albert(int n, int m, uint64_t seed) {
    return make_graph(n, barabasi_albert_edges(n, m, seed));
}

// Canonical representation for graph-equality assertions.
inline std::set<std::pair<NodeId, NodeId>> edge_set(const WorkingGraph& g) {
    auto list = g.alive_edge_list();
    return {list.begin(), list.end()};
}

inline std::vector<std::pair<int, int>> random_pair_edges(int n, long long m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace test_support
