#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "stpgc/pipeline.hpp"
#include "stpgc/topology.hpp"
#include "support.hpp"

using namespace stpgc;
using namespace test_support;

namespace {

CoarseningConfig exhaustive_config() {
    CoarseningConfig cfg;
    cfg.target_ratio = 1e-9;  // floors to zero alive-node target: no target
    return cfg;
}

BettiVector betti_of(const WorkingGraph& g, int max_dim = 2) {
    return betti_numbers(build_clique_complex(snapshot(g), max_dim));
}

}  // namespace

TEST_CASE("config validation rejects bad parameters") {
    CoarseningConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.theta1 = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.target_ratio = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.target_ratio = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.drop_edge_ratio = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.exact_iters = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("target_alive floors the ratio") {
    CoarseningConfig cfg;
    cfg.target_ratio = 0.5;
    CHECK(cfg.target_alive(35) == 17);
    cfg.target_ratio = 1e-9;
    CHECK(cfg.target_alive(1000) == kNoTarget);
}

TEST_CASE("exact coarsening preserves Betti numbers") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        WorkingGraph g = erdos_renyi(35, 0.1, seed);
        BettiVector before = betti_of(g, 3);
        SupernodeMap map(35);
        CoarseningReport report;
        report.original_nodes = 35;
        exact_coarsening(g, map, exhaustive_config(), nullptr, report);
        CHECK(betti_of(g, 3) == before);
    }
}

TEST_CASE("exact coarsening reaches a genuine fixed point") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        WorkingGraph g = barabasi_albert(40, 2, seed);
        SupernodeMap map(40);
        CoarseningReport report;
        report.original_nodes = 40;
        exact_coarsening(g, map, exhaustive_config(), nullptr, report);

        DominatedScan scan = brute_force_dominated_scan(snapshot(g));
        CHECK(scan.nodes.empty());
        CHECK(scan.edges.empty());
        for (NodeId u : g.alive_node_ids())
            CHECK_FALSE(plan_coning(g, u, kNoDegreeCap).has_value());
    }
}

TEST_CASE("exact coarsening stops at the target ratio") {
    WorkingGraph g = complete_graph(20);
    SupernodeMap map(20);
    CoarseningConfig cfg;
    cfg.target_ratio = 0.5;
    CoarseningReport report;
    report.original_nodes = 20;
    exact_coarsening(g, map, cfg, nullptr, report);
    CHECK(g.alive_nodes() == 10);
}

TEST_CASE("relaxed collapse bumps r only when progress stalls") {
    WorkingGraph g = cycle_graph(4);  // exact fixed point, needs r=1
    SupernodeMap map(4);
    CoarseningConfig cfg = exhaustive_config();
    cfg.theta2 = 1;
    int r = 0;
    CHECK(relaxed_strong_collapse(g, map, cfg, nullptr, r) == 0);
    CHECK(r == 1);
    int removed = relaxed_strong_collapse(g, map, cfg, nullptr, r);
    CHECK(removed == 3);  // C4 unravels completely at r=1
    CHECK(r == 1);        // 3 >= theta2 keeps r where it is
    CHECK(g.alive_nodes() == 1);
}

TEST_CASE("theta2 = 0 never bumps r") {
    WorkingGraph g = cycle_graph(4);
    SupernodeMap map(4);
    CoarseningConfig cfg = exhaustive_config();
    cfg.theta2 = 0;
    int r = 0;
    for (int i = 0; i < 3; ++i) CHECK(relaxed_strong_collapse(g, map, cfg, nullptr, r) == 0);
    CHECK(r == 0);
}

TEST_CASE("r resets instead of outrunning the shrinking degrees") {
    // sparse graph plus a demanding ratio: the r sweep must restart once r
    // exceeds every alive degree, or the remaining iterations are wasted
    WorkingGraph g = erdos_renyi(300, 8.0 / 299, 2);
    SupernodeMap map(300);
    CoarseningConfig cfg;
    cfg.target_ratio = 0.1;
    cfg.theta2 = 3;  // 1% of 300
    CoarseningReport report;
    report.original_nodes = 300;
    exact_coarsening(g, map, cfg, nullptr, report);
    approximate_coarsening(g, map, cfg, nullptr, report);
    CHECK_FALSE(report.ratio_unreached);
    CHECK(g.alive_nodes() <= cfg.target_alive(300));
}

TEST_CASE("approximate coarsening reaches ratios the exact phase cannot") {
    for (double c : {0.5, 0.25}) {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            WorkingGraph g = erdos_renyi(120, 0.06, seed);
            SupernodeMap map(120);
            CoarseningConfig cfg;
            cfg.target_ratio = c;
            cfg.theta2 = 1;
            CoarseningReport report;
            report.original_nodes = 120;
            exact_coarsening(g, map, cfg, nullptr, report);
            if (g.alive_nodes() > cfg.target_alive(120))
                approximate_coarsening(g, map, cfg, nullptr, report);
            CHECK_FALSE(report.ratio_unreached);
            CHECK(g.alive_nodes() <= cfg.target_alive(120));
        }
    }
}

TEST_CASE("node removals by strong collapse and coning never increase distances") {
    // observer-driven check of the per-move distance guarantees
    struct DistanceWatch : RemovalObserver {
        std::vector<std::vector<int>> base;  // keyed by original node ids
        int checked = 0;

        static std::vector<std::vector<int>> expand(const WorkingGraph& g) {
            GraphView v = snapshot(g);
            auto d = all_pairs_distances(v);
            int n = g.original_nodes();
            std::vector<std::vector<int>> out(n, std::vector<int>(n, kUnreachable));
            for (int i = 0; i < v.n; ++i)
                for (int j = 0; j < v.n; ++j) out[v.ids[i]][v.ids[j]] = d[i][j];
            return out;
        }
        void rebase(const WorkingGraph& g) { base = expand(g); }

        void compare(const WorkingGraph& g, int max_increase) {
            auto now = expand(g);
            for (NodeId u : g.alive_node_ids())
                for (NodeId v : g.alive_node_ids()) {
                    if (base[u][v] != kUnreachable) {
                        REQUIRE(now[u][v] != kUnreachable);
                        CHECK(now[u][v] <= base[u][v] + max_increase);
                    }
                }
            ++checked;
            base = std::move(now);
        }

        void on_node_removed(const WorkingGraph& g, NodeId, NodeId) override { compare(g, 0); }
        void on_coning_removed(const WorkingGraph& g, NodeId, NodeId) override { compare(g, 0); }
        void on_edge_inserted(const WorkingGraph& g, NodeId, NodeId) override { rebase(g); }
        void on_edge_removed(const WorkingGraph& g, NodeId, NodeId) override { compare(g, 1); }
    };

    DistanceWatch watch;
    for (uint64_t seed = 0; seed < 10; ++seed) {
        WorkingGraph g = erdos_renyi(30, 0.12, seed);
        SupernodeMap map(30);
        watch.rebase(g);
        CoarseningReport report;
        report.original_nodes = 30;
        exact_coarsening(g, map, exhaustive_config(), nullptr, report, &watch);
    }
    CHECK(watch.checked > 0);
}

TEST_CASE("an edge removal can realize the +1 distance bound") {
    WorkingGraph g = complete_graph(3);
    auto before = all_pairs_distances(snapshot(g));
    CHECK(before[0][1] == 1);
    CHECK(g_edge_collapse(g, kNoDegreeCap, nullptr, nullptr) == 1);
    auto after = all_pairs_distances(snapshot(g));
    // exactly one pair moved from distance 1 to 2
    int bumped = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(after[i][j] <= before[i][j] + 1);
            if (after[i][j] == before[i][j] + 1) ++bumped;
        }
    CHECK(bumped == 2);  // the removed edge's endpoints, both directions
}

TEST_CASE("attribute aggregation") {
    WorkingGraph g = path_graph(4);
    SupernodeMap map(4);
    collapse_node(g, map, 0, 1);  // supernode 1 = {0,1}
    collapse_node(g, map, 3, 2);  // supernode 2 = {2,3}

    AttributedData attrs;
    attrs.dim = 2;
    attrs.features = {1, 10, 3, 30, 5, 50, 7, 70};
    attrs.labels = {4, 9, 9, -1};

    AggregatedAttributes agg = aggregate_attributes(g, map, attrs);
    CHECK(agg.supernodes == std::vector<NodeId>{1, 2});
    CHECK(agg.features == std::vector<double>{2, 20, 6, 60});
    // supernode 1 votes {4:1, 9:1}: tie goes to the lowest label id;
    // supernode 2 votes {9:1} with the unlabeled member excluded
    CHECK(agg.labels == std::vector<int>{4, 9});
}

TEST_CASE("drop_edges removes the floored quota, heterophilic first") {
    WorkingGraph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    std::vector<int> labels{0, 0, 0, 1, 1, 1};  // only (2,3) is heterophilic

    SUBCASE("quota below the heterophilic pool") {
        CHECK(drop_edges(g, labels, 0.2, 1) == 1);  // floor(0.2*5) = 1
        CHECK_FALSE(g.has_edge(2, 3));
        CHECK(g.alive_edges() == 4);
    }
    SUBCASE("spill into homophilic edges") {
        CHECK(drop_edges(g, labels, 0.6, 1) == 3);  // floor(0.6*5) = 3
        CHECK_FALSE(g.has_edge(2, 3));
        CHECK(g.alive_edges() == 2);
    }
    SUBCASE("sub-floor ratios drop nothing") {
        CHECK(drop_edges(g, labels, 0.19, 1) == 0);
        CHECK(g.alive_edges() == 5);
    }
    SUBCASE("same seed, same victims") {
        WorkingGraph a = erdos_renyi(40, 0.2, 3), b = a;
        drop_edges(a, {}, 0.3, 99);
        drop_edges(b, {}, 0.3, 99);
        CHECK(edge_set(a) == edge_set(b));
    }
}

TEST_CASE("full pipeline is deterministic end to end") {
    AttributedData attrs;
    attrs.labels.assign(60, 0);
    for (int i = 0; i < 60; i += 3) attrs.labels[i] = 1;

    auto run = [&](WorkingGraph g) {
        SupernodeMap map(60);
        CoarseningConfig cfg;
        cfg.target_ratio = 0.4;
        cfg.theta2 = 1;
        cfg.drop_edge_ratio = 0.1;
        cfg.rng_seed = 1234;
        AggregatedAttributes agg;
        CoarseningReport rep = stpgc_for_gnn(g, map, cfg, attrs, agg);
        std::vector<NodeId> assign(60);
        for (NodeId u = 0; u < 60; ++u) assign[u] = map.supernode_of(u);
        return std::tuple{edge_set(g), assign, agg.labels, rep.alive_nodes};
    };

    WorkingGraph g = barabasi_albert(60, 3, 7);
    auto a = run(g), b = run(g);
    CHECK(a == b);
}

TEST_CASE("pipeline report accounting is consistent") {
    WorkingGraph g = erdos_renyi(80, 0.08, 5);
    SupernodeMap map(80);
    CoarseningConfig cfg;
    cfg.target_ratio = 0.3;
    cfg.theta2 = 1;
    AttributedData attrs;
    AggregatedAttributes agg;
    CoarseningReport rep = stpgc_for_gnn(g, map, cfg, attrs, agg);

    CHECK(rep.original_nodes == 80);
    CHECK(rep.alive_nodes == g.alive_nodes());
    CHECK(rep.total_nodes_removed() == 80 - g.alive_nodes());
    CHECK(rep.final_ratio == doctest::Approx(g.alive_nodes() / 80.0));
    CHECK(rep.alive_nodes <= cfg.target_alive(80));
    // every original node maps to an alive supernode
    for (NodeId u = 0; u < 80; ++u) CHECK(g.is_alive(map.supernode_of(u)));
    // member lists partition the original nodes
    size_t members = 0;
    for (NodeId s : g.alive_node_ids()) members += map.members(s).size();
    CHECK(members == 80);
}

TEST_CASE("strong collapse keeps merges in-label when the structure allows") {
    // two K4 blocks, labels following the blocks, joined by two disjoint
    // bridges so each block collapses internally and the bridges survive
    WorkingGraph h(8);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            h.insert_edge(i, j);
            h.insert_edge(i + 4, j + 4);
        }
    h.insert_edge(3, 4);
    h.insert_edge(2, 5);
    AttributedData attrs;
    attrs.labels = {0, 0, 0, 0, 1, 1, 1, 1};
    SupernodeMap map(8);
    g_strong_collapse(h, map, kNoDegreeCap, 0, &attrs, nullptr, kNoTarget);

    // the bridge endpoints survive as a 4-cycle
    CHECK(edge_set(h) == std::set<std::pair<NodeId, NodeId>>{
                             {2, 3}, {2, 5}, {3, 4}, {4, 5}});
    // every merge stayed within its block's label
    for (NodeId u = 0; u < 8; ++u)
        CHECK(attrs.labels[map.supernode_of(u)] == attrs.labels[u]);
}
