#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stpgc/graph.hpp"

namespace stpgc {

class OracleScaleError : public std::runtime_error {
public:
    explicit OracleScaleError(const std::string& what) : std::runtime_error(what) {}
};

// Immutable compact snapshot of the alive part of a WorkingGraph.
// Compact ids are 0..n-1 in ascending original-id order; `ids[i]` maps back.
struct GraphView {
    int n = 0;
    std::vector<NodeId> ids;
    std::vector<std::vector<int>> adj;  // sorted compact ids

    bool has_edge(int u, int v) const {
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }
    long long edge_count() const;
};

GraphView snapshot(const WorkingGraph& g);
GraphView view_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Clique complex up to dimension `max_dim` (2 or 3) with GF(2) boundary
// matrices in sparse column form. Simplices are sorted ascending-vertex
// tuples, listed in lexicographic order.
struct CliqueComplex {
    int max_dim = 2;
    std::vector<int> nodes;                       // compact ids present
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> tetrahedra;
    // boundary[k][j] = row indices of the k-th boundary's column j
    std::vector<std::vector<int>> d1, d2, d3;
};

inline constexpr long long kOracleSimplexGuard = 1'000'000;

CliqueComplex build_clique_complex(const GraphView& g, int max_dim);

struct BettiVector {
    long long beta0 = 0;
    long long beta1 = 0;
    std::optional<long long> beta2;

    bool operator==(const BettiVector&) const = default;
};

BettiVector betti_numbers(const CliqueComplex& complex);

// Rank over GF(2) of a sparse-column matrix with `rows` rows.
long long gf2_rank(const std::vector<std::vector<int>>& columns, int rows);

// Exhaustive dominance reference: every dominated node with one dominator,
// every dominated edge with one dominator, no thresholds or early exits.
// Witness choice is the lowest-id dominator.
struct DominatedScan {
    std::vector<std::pair<int, int>> nodes;                 // (u, dominator)
    std::vector<std::array<int, 3>> edges;                  // (x, y, dominator)
};

DominatedScan brute_force_dominated_scan(const GraphView& g);
DominatedScan brute_force_dominated_scan_parallel(const GraphView& g);

inline constexpr int kUnreachable = -1;

// BFS from every node; dist[u][v] = hops, kUnreachable when disconnected.
std::vector<std::vector<int>> all_pairs_distances(const GraphView& g);
std::vector<std::vector<int>> all_pairs_distances_parallel(const GraphView& g);

int connected_components(const GraphView& g);

}  // namespace stpgc
