#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stpgc/collapse.hpp"
#include "stpgc/coning.hpp"
#include "stpgc/graph.hpp"

namespace stpgc {

struct CoarseningConfig {
    int theta1 = kNoDegreeCap;    // degree threshold for dominance checks
    int theta2 = 0;               // min removals per relaxed pass before r increments
    int exact_iters = 16;         // cap on strong/edge alternations per exact round
    int approx_iters = 256;       // cap on relaxed/edge iterations
    double target_ratio = 1.0;    // c in (0, 1]
    double drop_edge_ratio = 0.0; // export-time DropEdge, [0, 1)
    uint64_t rng_seed = 0;

    void validate() const;
    // Alive-node count at which the ratio counts as reached:
    // floor(c * original), "reached" meaning alive/original <= c.
    // A ratio small enough to floor to zero disables the target, so the
    // exact phase runs to exhaustion.
    int target_alive(int original_nodes) const;
};

struct PhaseEntry {
    std::string phase;
    int nodes_removed = 0;
    int edges_removed = 0;
    int edges_inserted = 0;
    int r_value = 0;
    double wall_seconds = 0.0;
};

struct IngestWarnings {
    long long self_loops = 0;
    long long duplicate_edges = 0;
    long long comment_lines = 0;
};

struct CoarseningReport {
    std::vector<PhaseEntry> phase_log;
    int original_nodes = 0;
    int alive_nodes = 0;
    double final_ratio = 1.0;
    int d_max = 0;
    double d_bar = 0.0;
    IngestWarnings ingest_warnings;
    bool ratio_unreached = false;  // approximate phase ran out of iterations

    int total_nodes_removed() const;
    void finish(const WorkingGraph& g);  // fills ratio and degree stats
};

// Strong/edge alternation to a fixed point (capped at exact_iters per
// round), then neighborhood coning; rounds repeat until no pass changes the
// graph. Every move preserves homotopy.
void exact_coarsening(WorkingGraph& g, SupernodeMap& map,
                      const CoarseningConfig& cfg, const AttributedData* attrs,
                      CoarseningReport& report, RemovalObserver* obs = nullptr);

// One strong-collapse pass at the current relaxation level; bumps r when
// removals fall below theta2. Returns nodes removed.
int relaxed_strong_collapse(WorkingGraph& g, SupernodeMap& map,
                            const CoarseningConfig& cfg, const AttributedData* attrs,
                            int& r_state, RemovalObserver* obs = nullptr);

// Relaxed-collapse / edge-collapse loop until the ratio is reached or
// approx_iters is exhausted. Homotopy is not guaranteed here.
void approximate_coarsening(WorkingGraph& g, SupernodeMap& map,
                            const CoarseningConfig& cfg, const AttributedData* attrs,
                            CoarseningReport& report, RemovalObserver* obs = nullptr);

// Supernode attributes after coarsening: features are the unweighted mean
// over members, labels the most frequent member label (ties to the lowest
// label id; unlabeled members are excluded from the vote).
struct AggregatedAttributes {
    std::vector<NodeId> supernodes;  // alive supernode ids, ascending
    int dim = 0;
    std::vector<double> features;    // row-major, |supernodes| x dim
    std::vector<int> labels;         // -1 = unlabeled; empty when no labels
};

AggregatedAttributes aggregate_attributes(const WorkingGraph& g,
                                          const SupernodeMap& map,
                                          const AttributedData& attrs);

// Removes floor(ratio * alive_edges) edges, sampling uniformly (seeded)
// from heterophilic edges first and spilling over to homophilic ones only
// when the heterophilic pool is smaller than the quota. `labels_by_node`
// may be empty (no labels: everything lands in the homophilic pool).
long long drop_edges(WorkingGraph& g, const std::vector<int>& labels_by_node,
                     double ratio, uint64_t seed);

// Full pipeline: exact then (if needed) approximate coarsening, attribute
// aggregation, export-time DropEdge.
CoarseningReport stpgc_for_gnn(WorkingGraph& g, SupernodeMap& map,
                               const CoarseningConfig& cfg,
                               const AttributedData& attrs,
                               AggregatedAttributes& aggregated_out,
                               RemovalObserver* obs = nullptr);

}  // namespace stpgc
