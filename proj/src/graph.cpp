#include "stpgc/graph.hpp"

#include <algorithm>

namespace stpgc {

WorkingGraph::WorkingGraph(int node_count)
    : adj_(node_count), alive_(node_count, 1), alive_count_(node_count) {}

bool WorkingGraph::has_edge(NodeId x, NodeId y) const {
    if (!is_alive(x) || !is_alive(y)) return false;
    return adj_[x].set.count(y) > 0;
}

std::vector<NodeId> WorkingGraph::neighbors(NodeId u) const {
    check_alive(u);
    std::vector<NodeId> out;
    out.reserve(adj_[u].set.size());
    for (NodeId w : adj_[u].set)
        if (alive_[w]) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeId> WorkingGraph::alive_node_ids() const {
    std::vector<NodeId> out;
    out.reserve(alive_count_);
    for (NodeId u = 0; u < original_nodes(); ++u)
        if (alive_[u]) out.push_back(u);
    return out;
}

std::vector<std::pair<NodeId, NodeId>> WorkingGraph::alive_edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < original_nodes(); ++u) {
        if (!alive_[u]) continue;
        for (NodeId w : adj_[u].set)
            if (alive_[w] && u < w) out.emplace_back(u, w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void WorkingGraph::insert_edge(NodeId x, NodeId y) {
    check_alive(x);
    check_alive(y);
    if (x == y) throw GraphError("self-loop insert on node " + std::to_string(x));
    if (adj_[x].set.count(y))
        throw GraphError("duplicate edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
    adj_[x].set.insert(y);
    adj_[y].set.insert(x);
    ++edge_count_;
}

void WorkingGraph::delete_edge(NodeId x, NodeId y) {
    check_alive(x);
    check_alive(y);
    if (!adj_[x].set.count(y))
        throw GraphError("missing edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
    adj_[x].set.erase(y);
    adj_[y].set.erase(x);
    --edge_count_;
}

void WorkingGraph::kill_node(NodeId u) {
    check_alive(u);
    edge_count_ -= degree(u);
    alive_[u] = 0;
    --alive_count_;
    for (NodeId w : adj_[u].set) {
        if (!alive_[w]) continue;
        ++adj_[w].dead;
        maybe_purge(w);
    }
}

void WorkingGraph::maybe_purge(NodeId u) {
    AdjSet& a = adj_[u];
    if (a.dead * 2 <= static_cast<int>(a.set.size())) return;
    std::erase_if(a.set, [this](NodeId w) { return !alive_[w]; });
    a.dead = 0;
}

SupernodeMap::SupernodeMap(int node_count)
    : assignment_(node_count), member_lists_(node_count) {
    for (NodeId u = 0; u < node_count; ++u) {
        assignment_[u] = u;
        member_lists_[u] = {u};
    }
}

void SupernodeMap::merge(NodeId u, NodeId dominator) {
    if (u == dominator)
        throw GraphError("self-merge of node " + std::to_string(u));
    auto& from = member_lists_[u];
    auto& to = member_lists_[dominator];
    for (NodeId m : from) assignment_[m] = dominator;
    to.insert(to.end(), from.begin(), from.end());
    from.clear();
    from.shrink_to_fit();
}

std::vector<NodeId> common_neighbors(const WorkingGraph& g, NodeId x, NodeId y) {
    g.check_alive(x);
    g.check_alive(y);
    // iterate the smaller neighborhood against the larger's hash set
    NodeId a = x, b = y;
    if (g.degree(b) < g.degree(a)) std::swap(a, b);
    std::vector<NodeId> out;
    g.for_each_neighbor(a, [&](NodeId w) {
        if (w != b && g.has_edge(w, b)) out.push_back(w);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeId> open_edge_neighborhood(const WorkingGraph& g, NodeId x, NodeId y) {
    if (!g.has_edge(x, y))
        throw GraphError("invalid edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
    return common_neighbors(g, x, y);
}

std::vector<NodeId> closed_edge_neighborhood(const WorkingGraph& g, NodeId x, NodeId y) {
    std::vector<NodeId> out = open_edge_neighborhood(g, x, y);
    out.push_back(x);
    out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
}

void collapse_node(WorkingGraph& g, SupernodeMap& map, NodeId u, NodeId dominator) {
    g.check_alive(u);
    g.check_alive(dominator);
    map.merge(u, dominator);
    g.kill_node(u);
}

}  // namespace stpgc
