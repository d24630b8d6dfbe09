#include "stpgc/collapse.hpp"

#include <algorithm>

namespace stpgc {

namespace {

// |N[u] \ N[v]| for adjacent u, v. Since u ∈ N[v] and v ∈ N[v], only
// neighbors of u missing from N(v) contribute. Stops counting past `cap`.
int closed_diff_size(const WorkingGraph& g, NodeId u, NodeId v, int cap) {
    int misses = 0;
    for (NodeId w : g.neighbors(u)) {
        if (w == v) continue;
        if (!g.has_edge(v, w)) {
            if (++misses > cap) return misses;
        }
    }
    return misses;
}

bool is_heterophilic(const AttributedData* attrs, NodeId x, NodeId y) {
    if (!attrs || !attrs->has_labels()) return false;
    int lx = attrs->label_of(x), ly = attrs->label_of(y);
    return lx >= 0 && ly >= 0 && lx != ly;
}

}  // namespace

DominanceResult find_node_dominator(const WorkingGraph& g, NodeId u, int r,
                                    const AttributedData* attrs) {
    g.check_alive(u);
    const int deg_u = g.degree(u);
    if (deg_u + 1 <= r) return {};  // relaxed check requires |N[u]| > r

    std::vector<NodeId> candidates = g.neighbors(u);
    const int label_u = attrs ? attrs->label_of(u) : -1;
    if (label_u >= 0) {
        std::stable_partition(candidates.begin(), candidates.end(), [&](NodeId v) {
            return attrs->label_of(v) == label_u;
        });
    }

    for (NodeId v : candidates) {
        if (g.degree(v) < deg_u) continue;  // necessary: |N[v]| >= |N[u]|
        int misses = closed_diff_size(g, u, v, r);
        if (misses <= r) return {true, v, misses};
    }
    return {};
}

DominanceResult find_edge_dominator(const WorkingGraph& g, NodeId x, NodeId y) {
    const std::vector<NodeId> common = open_edge_neighborhood(g, x, y);
    for (NodeId v : common) {
        bool ok = true;
        for (NodeId w : common) {
            if (w != v && !g.has_edge(v, w)) {
                ok = false;
                break;
            }
        }
        if (ok) return {true, v, 0};
    }
    return {};
}

DominanceResult absent_edge_dominator(const WorkingGraph& g, NodeId v, NodeId w) {
    const std::vector<NodeId> common = common_neighbors(g, v, w);
    for (NodeId c : common) {
        bool ok = true;
        for (NodeId d : common) {
            if (d != c && !g.has_edge(c, d)) {
                ok = false;
                break;
            }
        }
        if (ok) return {true, c, 0};
    }
    return {};
}

int g_strong_collapse(WorkingGraph& g, SupernodeMap& map, int theta1, int r,
                      const AttributedData* attrs,
                      const std::vector<NodeId>* seeds,
                      int target_alive,
                      std::vector<NodeId>* affected,
                      RemovalObserver* obs) {
    NodeWorklist wl(g.original_nodes());
    if (seeds) {
        std::vector<NodeId> s = *seeds;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (NodeId u : s)
            if (g.is_alive(u)) wl.push(u);
    } else {
        for (NodeId u : g.alive_node_ids()) wl.push(u);
    }

    int removed = 0;
    while (!wl.empty()) {
        if (target_alive != kNoTarget && g.alive_nodes() <= target_alive) break;
        NodeId u = wl.pop();
        if (!g.is_alive(u)) continue;
        if (g.degree(u) > theta1) continue;
        DominanceResult res = find_node_dominator(g, u, r, attrs);
        if (!res.dominated) continue;

        std::vector<NodeId> nbrs = g.neighbors(u);
        collapse_node(g, map, u, res.dominator);
        ++removed;
        if (obs) obs->on_node_removed(g, u, res.dominator);
        for (NodeId w : nbrs) {
            wl.push(w);
            if (affected) affected->push_back(w);
        }
    }
    return removed;
}

int g_edge_collapse(WorkingGraph& g, int theta1,
                    const AttributedData* attrs,
                    const std::vector<NodeId>* seed_nodes,
                    std::vector<NodeId>* affected,
                    RemovalObserver* obs) {
    std::vector<std::pair<NodeId, NodeId>> initial;
    if (seed_nodes) {
        std::vector<NodeId> s = *seed_nodes;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (NodeId u : s) {
            if (!g.is_alive(u)) continue;
            for (NodeId w : g.neighbors(u))
                initial.emplace_back(std::min(u, w), std::max(u, w));
        }
        std::sort(initial.begin(), initial.end());
        initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
    } else {
        initial = g.alive_edge_list();
    }
    if (attrs && attrs->has_labels()) {
        // heterophilic edges first, homophilic second
        std::stable_partition(initial.begin(), initial.end(), [&](const auto& e) {
            return is_heterophilic(attrs, e.first, e.second);
        });
    }

    EdgeWorklist wl;
    for (const auto& [x, y] : initial) wl.push(x, y);

    int removed = 0;
    while (!wl.empty()) {
        auto [x, y] = wl.pop();
        if (!g.has_edge(x, y)) continue;  // endpoint died or edge already gone
        if (g.degree(x) + g.degree(y) > 2LL * theta1) continue;
        DominanceResult res = find_edge_dominator(g, x, y);
        if (!res.dominated) continue;

        g.delete_edge(x, y);
        ++removed;
        if (obs) obs->on_edge_removed(g, x, y);
        if (affected) {
            affected->push_back(x);
            affected->push_back(y);
        }
        for (NodeId w : g.neighbors(x)) wl.push(x, w);
        for (NodeId w : g.neighbors(y)) wl.push(y, w);
    }
    return removed;
}

}  // namespace stpgc
