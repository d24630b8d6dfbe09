#include "stpgc/coning.hpp"

#include <algorithm>

namespace stpgc {

std::optional<ConingPlan> plan_coning(WorkingGraph& g, NodeId u, int theta1,
                                      const AttributedData* attrs) {
    g.check_alive(u);
    if (g.degree(u) > theta1) return std::nullopt;

    const std::vector<NodeId> nbrs = g.neighbors(u);
    if (nbrs.empty()) return std::nullopt;

    std::vector<NodeId> apices = nbrs;
    const int label_u = attrs ? attrs->label_of(u) : -1;
    if (label_u >= 0) {
        std::stable_partition(apices.begin(), apices.end(), [&](NodeId v) {
            return attrs->label_of(v) == label_u;
        });
    }

    for (NodeId v : apices) {
        ConingPlan plan{u, v, {}};
        bool feasible = true;
        for (NodeId w : nbrs) {
            if (w == v || g.has_edge(v, w)) continue;
            if (absent_edge_dominator(g, v, w).dominated) {
                // apply virtually so later checks see earlier insertions
                g.insert_edge(v, w);
                plan.insert_list.emplace_back(v, w);
            } else {
                feasible = false;
                break;
            }
        }
        for (auto it = plan.insert_list.rbegin(); it != plan.insert_list.rend(); ++it)
            g.delete_edge(it->first, it->second);
        if (feasible) return plan;
    }
    return std::nullopt;
}

namespace {

// Executes a plan: insert the listed edges, delete the target, then remove
// any inserted edge still dominated by a surviving node.
void apply_plan(WorkingGraph& g, SupernodeMap& map, const ConingPlan& plan,
                std::vector<NodeId>& affected, ConingStats& stats, RemovalObserver* obs) {
    for (const auto& [v, w] : plan.insert_list) {
        g.insert_edge(v, w);
        ++stats.edges_inserted;
        if (obs) obs->on_edge_inserted(g, v, w);
    }
    std::vector<NodeId> nbrs = g.neighbors(plan.target);
    collapse_node(g, map, plan.target, plan.apex);
    ++stats.nodes_removed;
    if (obs) obs->on_coning_removed(g, plan.target, plan.apex);

    for (const auto& [v, w] : plan.insert_list) {
        if (!g.has_edge(v, w)) continue;
        if (find_edge_dominator(g, v, w).dominated) {
            g.delete_edge(v, w);
            ++stats.edges_removed;
            if (obs) obs->on_edge_removed(g, v, w);
        }
    }

    affected.insert(affected.end(), nbrs.begin(), nbrs.end());
    for (const auto& [v, w] : plan.insert_list) {
        affected.push_back(v);
        affected.push_back(w);
    }
}

}  // namespace

ConingStats neighborhood_coning(WorkingGraph& g, SupernodeMap& map, int theta1,
                                const AttributedData* attrs,
                                int target_alive,
                                RemovalObserver* obs) {
    ConingStats stats;
    bool progress = true;
    // Repeat full passes until one removes nothing: local re-enqueueing
    // covers most cascades, the final pass certifies exhaustion.
    while (progress) {
        progress = false;
        if (target_alive != kNoTarget && g.alive_nodes() <= target_alive) break;

        MinDegreeQueue heap;
        for (NodeId u : g.alive_node_ids()) heap.push(u, g.degree(u));

        while (true) {
            if (target_alive != kNoTarget && g.alive_nodes() <= target_alive) break;
            std::optional<NodeId> popped = heap.pop(g);
            if (!popped) break;
            NodeId u = *popped;
            if (g.degree(u) > theta1) continue;

            std::optional<ConingPlan> plan = plan_coning(g, u, theta1, attrs);
            if (!plan) continue;

            std::vector<NodeId> affected;
            apply_plan(g, map, *plan, affected, stats, obs);
            progress = true;

            // refresh entries for everything within two hops of the change
            std::sort(affected.begin(), affected.end());
            affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
            for (NodeId a : affected) {
                if (!g.is_alive(a)) continue;
                heap.push(a, g.degree(a));
                for (NodeId b : g.neighbors(a)) heap.push(b, g.degree(b));
            }
        }
    }
    return stats;
}

}  // namespace stpgc
