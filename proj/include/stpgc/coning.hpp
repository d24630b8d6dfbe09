#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "stpgc/collapse.hpp"
#include "stpgc/graph.hpp"

namespace stpgc {

struct ConingPlan {
    NodeId target = -1;
    NodeId apex = -1;
    // Edges absent from the graph that become dominated when applied in
    // list order; |insert_list| <= deg(target) - 1.
    std::vector<std::pair<NodeId, NodeId>> insert_list;
};

// Min-heap over (degree, node) with stale-entry skipping: degree updates
// push fresh entries, and popped entries whose recorded degree no longer
// matches are discarded.
class MinDegreeQueue {
public:
    void push(NodeId u, int degree) { heap_.push({degree, u}); }

    // Pops the next entry that is alive and whose recorded degree is
    // current. Returns nullopt when the heap is exhausted.
    std::optional<NodeId> pop(const WorkingGraph& g) {
        while (!heap_.empty()) {
            auto [deg, u] = heap_.top();
            heap_.pop();
            if (!g.is_alive(u) || g.degree(u) != deg) continue;  // stale
            return u;
        }
        return std::nullopt;
    }

    bool empty() const { return heap_.empty(); }

private:
    using Entry = std::pair<int, NodeId>;  // (degree, node); ties by lowest id
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
};

// Searches for an apex v in N(u) (same-label first, then ascending id) such
// that every missing edge (v,w), w in N(u)\{v}, can be inserted as a
// dominated edge. Entries earlier in the list count as applied when checking
// later ones; the graph is restored before returning.
std::optional<ConingPlan> plan_coning(WorkingGraph& g, NodeId u, int theta1,
                                      const AttributedData* attrs = nullptr);

struct ConingStats {
    int nodes_removed = 0;
    int edges_inserted = 0;
    int edges_removed = 0;  // inserted edges cleaned up post-removal
};

// NeighborhoodConing pass: pops nodes in ascending current degree, executes
// the first feasible plan, deletes the target (merging into the apex), then
// removes any inserted edge that is still dominated. Runs until no node
// admits a plan or the target alive count is reached.
ConingStats neighborhood_coning(WorkingGraph& g, SupernodeMap& map, int theta1,
                                const AttributedData* attrs,
                                int target_alive,
                                RemovalObserver* obs = nullptr);

}  // namespace stpgc
