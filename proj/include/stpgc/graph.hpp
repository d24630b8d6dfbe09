#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace stpgc {

using NodeId = int;

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Mutable undirected simple graph with lazy node deletion.
//
// Dead nodes are tombstoned in O(1); their ids linger inside neighbor
// adjacency sets until the tombstone density of a set exceeds 50%, at
// which point the set is purged. Degrees are tracked as
// set size minus tombstone count, so degree queries stay O(1).
class WorkingGraph {
public:
    explicit WorkingGraph(int node_count);

    int original_nodes() const { return static_cast<int>(adj_.size()); }
    int alive_nodes() const { return alive_count_; }
    long long alive_edges() const { return edge_count_; }

    bool is_alive(NodeId u) const {
        return u >= 0 && u < original_nodes() && alive_[u];
    }
    bool has_edge(NodeId x, NodeId y) const;

    int degree(NodeId u) const {
        check_alive(u);
        return static_cast<int>(adj_[u].set.size()) - adj_[u].dead;
    }

    // Alive neighbors of u in ascending id order.
    std::vector<NodeId> neighbors(NodeId u) const;

    // Unordered iteration over alive neighbors; skips the sort when order
    // does not matter.
    template <typename F>
    void for_each_neighbor(NodeId u, F&& f) const {
        check_alive(u);
        for (NodeId w : adj_[u].set)
            if (alive_[w]) f(w);
    }

    std::vector<NodeId> alive_node_ids() const;
    std::vector<std::pair<NodeId, NodeId>> alive_edge_list() const;

    void insert_edge(NodeId x, NodeId y);
    void delete_edge(NodeId x, NodeId y);

    // Tombstones u and detaches it from all neighbors' degree counts.
    // Supernode bookkeeping lives in SupernodeMap; see collapse_node().
    void kill_node(NodeId u);

    void check_alive(NodeId u) const {
        if (!is_alive(u))
            throw GraphError("invalid node " + std::to_string(u));
    }

private:
    struct AdjSet {
        std::unordered_set<NodeId> set;
        int dead = 0;  // tombstoned ids still present in `set`
    };

    void maybe_purge(NodeId u);

    std::vector<AdjSet> adj_;
    std::vector<char> alive_;
    int alive_count_ = 0;
    long long edge_count_ = 0;
};

// Surjection original node -> supernode. A supernode's id is the id of its
// surviving representative in the WorkingGraph.
class SupernodeMap {
public:
    explicit SupernodeMap(int node_count);

    NodeId supernode_of(NodeId original) const { return assignment_[original]; }
    const std::vector<NodeId>& members(NodeId supernode) const {
        return member_lists_[supernode];
    }
    int original_nodes() const { return static_cast<int>(assignment_.size()); }

    // Moves every member of u's supernode into dominator's supernode.
    void merge(NodeId u, NodeId dominator);

private:
    std::vector<NodeId> assignment_;
    std::vector<std::vector<NodeId>> member_lists_;
};

// Deletes u from the graph, merging its supernode into the dominator's.
void collapse_node(WorkingGraph& g, SupernodeMap& map, NodeId u, NodeId dominator);

// N(x) ∩ N(y), ascending. Does not require the edge (x,y) to exist.
std::vector<NodeId> common_neighbors(const WorkingGraph& g, NodeId x, NodeId y);

// N(x,y) for an existing edge; throws if (x,y) is not alive.
std::vector<NodeId> open_edge_neighborhood(const WorkingGraph& g, NodeId x, NodeId y);

// N[x,y] = {x,y} ∪ N(x,y) for an existing edge, ascending.
std::vector<NodeId> closed_edge_neighborhood(const WorkingGraph& g, NodeId x, NodeId y);

// Per-node dense features and optional integer class labels.
// Label -1 means unlabeled.
struct AttributedData {
    int dim = 0;
    std::vector<double> features;  // row-major, original_nodes x dim
    std::vector<int> labels;       // empty when no label file was given

    bool has_features() const { return dim > 0; }
    bool has_labels() const { return !labels.empty(); }

    int label_of(NodeId u) const {
        return has_labels() ? labels[u] : -1;
    }
    const double* feature_row(NodeId u) const { return features.data() + static_cast<size_t>(u) * dim; }
};

}  // namespace stpgc
