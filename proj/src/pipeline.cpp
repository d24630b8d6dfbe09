#include "stpgc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace stpgc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

uint64_t bounded_draw(std::mt19937_64& rng, uint64_t n) {
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
        uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

// First k elements of a seeded Fisher-Yates shuffle.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, size_t k,
                                          std::mt19937_64& rng) {
    k = std::min(k, pool.size());
    for (size_t i = 0; i < k; ++i) {
        size_t j = i + static_cast<size_t>(bounded_draw(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace

void CoarseningConfig::validate() const {
    if (theta1 < 1) throw std::invalid_argument("theta1 must be >= 1");
    if (theta2 < 0) throw std::invalid_argument("theta2 must be >= 0");
    if (exact_iters < 1 || approx_iters < 1)
        throw std::invalid_argument("iteration caps must be >= 1");
    if (!(target_ratio > 0.0 && target_ratio <= 1.0))
        throw std::invalid_argument("target ratio must be in (0, 1]");
    if (!(drop_edge_ratio >= 0.0 && drop_edge_ratio < 1.0))
        throw std::invalid_argument("drop-edge ratio must be in [0, 1)");
}

int CoarseningConfig::target_alive(int original_nodes) const {
    return static_cast<int>(std::floor(target_ratio * original_nodes));
}

int CoarseningReport::total_nodes_removed() const {
    int total = 0;
    for (const auto& p : phase_log) total += p.nodes_removed;
    return total;
}

void CoarseningReport::finish(const WorkingGraph& g) {
    alive_nodes = g.alive_nodes();
    final_ratio = original_nodes > 0
                      ? static_cast<double>(alive_nodes) / original_nodes
                      : 1.0;
    d_max = 0;
    long long deg_sum = 0;
    for (NodeId u : g.alive_node_ids()) {
        int d = g.degree(u);
        d_max = std::max(d_max, d);
        deg_sum += d;
    }
    d_bar = alive_nodes > 0 ? static_cast<double>(deg_sum) / alive_nodes : 0.0;
}

void exact_coarsening(WorkingGraph& g, SupernodeMap& map,
                      const CoarseningConfig& cfg, const AttributedData* attrs,
                      CoarseningReport& report, RemovalObserver* obs) {
    const int target = cfg.target_alive(g.original_nodes());
    auto reached = [&] { return target != kNoTarget && g.alive_nodes() <= target; };

    for (;;) {
        bool alternation_converged = false;
        std::vector<NodeId> strong_affected, edge_affected;

        for (int it = 0; it < cfg.exact_iters && !reached(); ++it) {
            // Incremental re-checking: past the first iteration only nodes
            // incident to previously removed edges (and edges incident to
            // nodes that lost neighbors) can become dominated.
            const std::vector<NodeId>* sseed = it == 0 ? nullptr : &edge_affected;
            strong_affected.clear();
            auto t0 = Clock::now();
            int ns = g_strong_collapse(g, map, cfg.theta1, 0, attrs, sseed, target,
                                       &strong_affected, obs);
            report.phase_log.push_back(
                {"strong_collapse", ns, 0, 0, 0, seconds_since(t0)});
            if (reached()) break;

            const std::vector<NodeId>* eseed = it == 0 ? nullptr : &strong_affected;
            edge_affected.clear();
            t0 = Clock::now();
            int es = g_edge_collapse(g, cfg.theta1, attrs, eseed, &edge_affected, obs);
            report.phase_log.push_back(
                {"edge_collapse", 0, es, 0, 0, seconds_since(t0)});

            if (ns == 0 && es == 0) {
                alternation_converged = true;
                break;
            }
        }
        if (reached()) break;

        auto t0 = Clock::now();
        ConingStats cs = neighborhood_coning(g, map, cfg.theta1, attrs, target, obs);
        report.phase_log.push_back({"coning", cs.nodes_removed, cs.edges_removed,
                                    cs.edges_inserted, 0, seconds_since(t0)});
        if (reached()) break;
        // Coning insertions can expose new dominated nodes/edges elsewhere;
        // keep cycling until the whole round is quiescent.
        if (alternation_converged && cs.nodes_removed == 0) break;
    }
}

int relaxed_strong_collapse(WorkingGraph& g, SupernodeMap& map,
                            const CoarseningConfig& cfg, const AttributedData* attrs,
                            int& r_state, RemovalObserver* obs) {
    const int target = cfg.target_alive(g.original_nodes());
    int removed = g_strong_collapse(g, map, cfg.theta1, r_state, attrs,
                                    nullptr, target, nullptr, obs);
    if (removed < cfg.theta2) ++r_state;
    return removed;
}

void approximate_coarsening(WorkingGraph& g, SupernodeMap& map,
                            const CoarseningConfig& cfg, const AttributedData* attrs,
                            CoarseningReport& report, RemovalObserver* obs) {
    const int target = cfg.target_alive(g.original_nodes());
    int r = 0;
    for (int it = 0; it < cfg.approx_iters && g.alive_nodes() > target; ++it) {
        const int r_used = r;
        auto t0 = Clock::now();
        int ns = relaxed_strong_collapse(g, map, cfg, attrs, r, obs);
        if (ns == 0 && r > 0) {
            // r-relaxed dominance needs |N[u]| > r, so once r outgrows every
            // alive degree no pass can remove anything; removals meanwhile
            // shrink degrees. Restart the sweep at r = 0.
            int d_max = 0;
            for (NodeId u : g.alive_node_ids()) d_max = std::max(d_max, g.degree(u));
            if (r > d_max) r = 0;
        }
        report.phase_log.push_back(
            {"relaxed_strong_collapse", ns, 0, 0, r_used, seconds_since(t0)});
        if (g.alive_nodes() <= target) break;

        t0 = Clock::now();
        int es = g_edge_collapse(g, cfg.theta1, attrs, nullptr, nullptr, obs);
        report.phase_log.push_back(
            {"edge_collapse", 0, es, 0, r_used, seconds_since(t0)});
    }
    if (g.alive_nodes() > target) report.ratio_unreached = true;
}

AggregatedAttributes aggregate_attributes(const WorkingGraph& g,
                                          const SupernodeMap& map,
                                          const AttributedData& attrs) {
    AggregatedAttributes out;
    out.supernodes = g.alive_node_ids();
    out.dim = attrs.dim;
    if (attrs.has_features())
        out.features.resize(out.supernodes.size() * static_cast<size_t>(attrs.dim), 0.0);
    if (attrs.has_labels()) out.labels.assign(out.supernodes.size(), -1);

    for (size_t row = 0; row < out.supernodes.size(); ++row) {
        const auto& members = map.members(out.supernodes[row]);
        if (attrs.has_features()) {
            double* acc = out.features.data() + row * attrs.dim;
            for (NodeId m : members) {
                const double* f = attrs.feature_row(m);
                for (int j = 0; j < attrs.dim; ++j) acc[j] += f[j];
            }
            for (int j = 0; j < attrs.dim; ++j) acc[j] /= static_cast<double>(members.size());
        }
        if (attrs.has_labels()) {
            std::map<int, int> votes;
            for (NodeId m : members) {
                int l = attrs.label_of(m);
                if (l >= 0) ++votes[l];
            }
            int best = -1, best_count = 0;
            for (const auto& [label, count] : votes) {
                if (count > best_count) {  // ties keep the lowest label id
                    best = label;
                    best_count = count;
                }
            }
            out.labels[row] = best;
        }
    }
    return out;
}

long long drop_edges(WorkingGraph& g, const std::vector<int>& labels_by_node,
                     double ratio, uint64_t seed) {
    if (ratio <= 0.0) return 0;
    auto edges = g.alive_edge_list();
    const auto quota = static_cast<size_t>(std::floor(ratio * static_cast<double>(edges.size())));
    if (quota == 0) return 0;

    auto label = [&](NodeId u) {
        return u < static_cast<NodeId>(labels_by_node.size()) ? labels_by_node[u] : -1;
    };
    std::vector<std::pair<NodeId, NodeId>> hetero, homo;
    for (const auto& e : edges) {
        int lx = label(e.first), ly = label(e.second);
        if (lx >= 0 && ly >= 0 && lx != ly)
            hetero.push_back(e);
        else
            homo.push_back(e);
    }

    std::mt19937_64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> victims;
    if (quota <= hetero.size()) {
        victims = sample_without_replacement(std::move(hetero), quota, rng);
    } else {
        victims = std::move(hetero);
        auto spill = sample_without_replacement(std::move(homo), quota - victims.size(), rng);
        victims.insert(victims.end(), spill.begin(), spill.end());
    }
    for (const auto& [x, y] : victims) g.delete_edge(x, y);
    return static_cast<long long>(victims.size());
}

CoarseningReport stpgc_for_gnn(WorkingGraph& g, SupernodeMap& map,
                               const CoarseningConfig& cfg,
                               const AttributedData& attrs,
                               AggregatedAttributes& aggregated_out,
                               RemovalObserver* obs) {
    cfg.validate();
    CoarseningReport report;
    report.original_nodes = g.original_nodes();

    exact_coarsening(g, map, cfg, &attrs, report, obs);
    if (g.alive_nodes() > cfg.target_alive(g.original_nodes()))
        approximate_coarsening(g, map, cfg, &attrs, report, obs);

    aggregated_out = aggregate_attributes(g, map, attrs);

    if (cfg.drop_edge_ratio > 0.0) {
        std::vector<int> super_labels;
        if (!aggregated_out.labels.empty()) {
            super_labels.assign(g.original_nodes(), -1);
            for (size_t i = 0; i < aggregated_out.supernodes.size(); ++i)
                super_labels[aggregated_out.supernodes[i]] = aggregated_out.labels[i];
        }
        auto t0 = Clock::now();
        long long dropped = drop_edges(g, super_labels, cfg.drop_edge_ratio, cfg.rng_seed);
        report.phase_log.push_back({"drop_edge", 0, static_cast<int>(dropped), 0, 0,
                                    seconds_since(t0)});
    }

    report.finish(g);
    return report;
}

}  // namespace stpgc
