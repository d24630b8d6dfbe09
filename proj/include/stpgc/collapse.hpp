#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_set>
#include <vector>

#include "stpgc/graph.hpp"

namespace stpgc {

// theta1 value meaning "no degree cap".
inline constexpr int kNoDegreeCap = std::numeric_limits<int>::max();
// target_alive value meaning "no coarsening target".
inline constexpr int kNoTarget = 0;

struct DominanceResult {
    bool dominated = false;
    NodeId dominator = -1;
    int removed_set_size = 0;  // |N[u] \ N[v]| for relaxed checks, 0 when exact
};

// Callbacks fired after each individual graph mutation performed by the
// collapse passes. Used by the test harness to check the per-move
// shortest-path and dominance properties.
struct RemovalObserver {
    virtual ~RemovalObserver() = default;
    virtual void on_node_removed(const WorkingGraph&, NodeId /*u*/, NodeId /*dominator*/) {}
    virtual void on_edge_removed(const WorkingGraph&, NodeId /*x*/, NodeId /*y*/) {}
    virtual void on_edge_inserted(const WorkingGraph&, NodeId /*v*/, NodeId /*w*/) {}
    virtual void on_coning_removed(const WorkingGraph&, NodeId /*u*/, NodeId /*apex*/) {}
};

// Exact (r = 0) or r-relaxed node dominance. Scans candidates v in N(u),
// neighbors sharing u's label first, then ascending id; first hit wins.
DominanceResult find_node_dominator(const WorkingGraph& g, NodeId u, int r,
                                    const AttributedData* attrs = nullptr);

// Edge dominance per the worklist form: some v in N(x,y) with N(x,y) ⊆ N[v].
// Edges with empty common neighborhood are never dominated.
DominanceResult find_edge_dominator(const WorkingGraph& g, NodeId x, NodeId y);

// Same check for an edge that is not (yet) in the graph. Inserting (v,w)
// does not change N(v,w), so this decides whether (v,w) could be inserted
// as a dominated edge.
DominanceResult absent_edge_dominator(const WorkingGraph& g, NodeId v, NodeId w);

// FIFO worklist that rejects duplicate enqueues.
class NodeWorklist {
public:
    explicit NodeWorklist(int capacity) : queued_(capacity, 0) {}

    bool push(NodeId u) {
        if (queued_[u]) return false;
        queued_[u] = 1;
        fifo_.push_back(u);
        return true;
    }
    NodeId pop() {
        NodeId u = fifo_.front();
        fifo_.pop_front();
        queued_[u] = 0;
        return u;
    }
    bool empty() const { return fifo_.empty(); }
    bool contains(NodeId u) const { return queued_[u] != 0; }
    size_t size() const { return fifo_.size(); }

private:
    std::deque<NodeId> fifo_;
    std::vector<char> queued_;
};

class EdgeWorklist {
public:
    bool push(NodeId x, NodeId y) {
        if (!queued_.insert(key(x, y)).second) return false;
        fifo_.push_back({std::min(x, y), std::max(x, y)});
        return true;
    }
    std::pair<NodeId, NodeId> pop() {
        auto e = fifo_.front();
        fifo_.pop_front();
        queued_.erase(key(e.first, e.second));
        return e;
    }
    bool empty() const { return fifo_.empty(); }
    bool contains(NodeId x, NodeId y) const { return queued_.count(key(x, y)) > 0; }

private:
    static uint64_t key(NodeId x, NodeId y) {
        if (x > y) std::swap(x, y);
        return (static_cast<uint64_t>(x) << 32) | static_cast<uint32_t>(y);
    }
    std::deque<std::pair<NodeId, NodeId>> fifo_;
    std::unordered_set<uint64_t> queued_;
};

// One worklist-driven strong-collapse pass. `seeds` limits the initial
// worklist (incremental re-checking); pass nullptr to seed all alive nodes.
// Stops early once alive_nodes() <= target_alive (kNoTarget disables).
// Nodes that lost a neighbor are appended to `affected` when given.
int g_strong_collapse(WorkingGraph& g, SupernodeMap& map, int theta1, int r,
                      const AttributedData* attrs,
                      const std::vector<NodeId>* seeds,
                      int target_alive,
                      std::vector<NodeId>* affected = nullptr,
                      RemovalObserver* obs = nullptr);

// One edge-collapse pass run to worklist exhaustion. With labels present
// the initial worklist is two-tiered: heterophilic edges first. `seed_nodes`
// limits the initial worklist to edges incident to those nodes. Endpoints
// of removed edges are appended to `affected` when given.
int g_edge_collapse(WorkingGraph& g, int theta1,
                    const AttributedData* attrs,
                    const std::vector<NodeId>* seed_nodes,
                    std::vector<NodeId>* affected = nullptr,
                    RemovalObserver* obs = nullptr);

}  // namespace stpgc
