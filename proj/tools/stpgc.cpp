#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stpgc/collapse.hpp"
#include "stpgc/io.hpp"
#include "stpgc/pipeline.hpp"
#include "stpgc/topology.hpp"

namespace fs = std::filesystem;
using namespace stpgc;

namespace {

struct CommonOpts {
    std::string input, features, labels;
};

double average_degree(const WorkingGraph& g) {
    return g.alive_nodes() > 0
               ? 2.0 * static_cast<double>(g.alive_edges()) / g.alive_nodes()
               : 0.0;
}

CoarseningConfig make_config(const IngestResult& in, double ratio, int theta1,
                             int theta2, int exact_iters, int approx_iters,
                             double drop_edge_ratio, uint64_t seed) {
    CoarseningConfig cfg;
    cfg.theta1 = theta1 > 0 ? theta1 : default_theta1(average_degree(in.graph));
    cfg.theta2 = theta2 >= 0 ? theta2 : default_theta2(in.graph.original_nodes());
    cfg.exact_iters = exact_iters;
    cfg.approx_iters = approx_iters;
    cfg.target_ratio = ratio;
    cfg.drop_edge_ratio = drop_edge_ratio;
    cfg.rng_seed = seed;
    cfg.validate();
    return cfg;
}

int run_coarsen(const CommonOpts& io, double ratio, int theta1, int theta2,
                int exact_iters, int approx_iters, double drop_edge_ratio,
                uint64_t seed, const std::string& out_dir,
                const std::string& report_format) {
    IngestResult in = ingest(io.input, io.features, io.labels);
    CoarseningConfig cfg = make_config(in, ratio, theta1, theta2, exact_iters,
                                       approx_iters, drop_edge_ratio, seed);
    SupernodeMap map(in.graph.original_nodes());
    AggregatedAttributes agg;
    CoarseningReport report = stpgc_for_gnn(in.graph, map, cfg, in.attrs, agg);
    report.ingest_warnings = in.warnings;

    fs::create_directories(out_dir);
    write_file(out_dir + "/coarse_edges.txt", render_edge_list(in.graph, in.external_ids));
    write_file(out_dir + "/partition.csv", render_partition_csv(map, in.external_ids));
    if (in.attrs.has_features())
        write_file(out_dir + "/features.csv", render_features_csv(agg, in.external_ids));
    if (in.attrs.has_labels())
        write_file(out_dir + "/labels.csv", render_labels_csv(agg, in.external_ids));
    if (report_format == "text") {
        write_file(out_dir + "/report.txt", report_to_text(report));
        std::cout << report_to_text(report);
    } else {
        write_file(out_dir + "/report.json", report_to_json(report));
        std::cout << report_to_json(report);
    }
    return 0;
}

int run_verify(const CommonOpts& io, int max_nodes, const std::vector<double>& ratios,
               const std::string& out_path) {
    IngestResult in = ingest(io.input, io.features, io.labels);
    if (in.graph.original_nodes() > max_nodes)
        throw OracleScaleError("graph exceeds --max-nodes guard (" +
                               std::to_string(in.graph.original_nodes()) + " > " +
                               std::to_string(max_nodes) + ")");

    const int max_dim = in.graph.original_nodes() <= 60 ? 3 : 2;
    BettiVector before = betti_numbers(build_clique_complex(snapshot(in.graph), max_dim));

    WorkingGraph g = in.graph;
    SupernodeMap map(g.original_nodes());
    CoarseningConfig cfg;
    cfg.theta1 = kNoDegreeCap;
    cfg.target_ratio = 1e-9;  // floors to zero: run the exact phase to exhaustion
    CoarseningReport report;
    report.original_nodes = g.original_nodes();
    exact_coarsening(g, map, cfg, in.attrs.has_labels() ? &in.attrs : nullptr, report);
    BettiVector after = betti_numbers(build_clique_complex(snapshot(g), max_dim));

    bool all_pass = true;
    auto check = [&](const std::string& name, long long a, long long b) {
        bool ok = a == b;
        all_pass &= ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << ": " << a << " -> " << b << "\n";
    };
    check("beta0", before.beta0, after.beta0);
    check("beta1", before.beta1, after.beta1);
    if (before.beta2 && after.beta2) check("beta2", *before.beta2, *after.beta2);

    if (!ratios.empty()) {
        std::ostringstream csv;
        csv << "ratio,beta1\n";
        for (double c : ratios) {
            WorkingGraph gc = in.graph;
            SupernodeMap mc(gc.original_nodes());
            CoarseningConfig rc;
            rc.theta1 = kNoDegreeCap;
            rc.theta2 = default_theta2(gc.original_nodes());
            rc.target_ratio = c;
            AggregatedAttributes agg;
            stpgc_for_gnn(gc, mc, rc, in.attrs, agg);
            BettiVector b = betti_numbers(build_clique_complex(snapshot(gc), 2));
            csv << c << ',' << b.beta1 << '\n';
        }
        if (out_path.empty())
            std::cout << csv.str();
        else
            write_file(out_path, csv.str());
    }
    return all_pass ? 0 : 2;
}

int run_stats(const CommonOpts& io) {
    IngestResult in = ingest(io.input, io.features, io.labels);
    const GraphView v = snapshot(in.graph);
    int d_max = 0;
    for (const auto& a : v.adj) d_max = std::max(d_max, static_cast<int>(a.size()));
    std::cout << "nodes: " << v.n << "\n"
              << "edges: " << v.edge_count() << "\n"
              << "d_max: " << d_max << "\n"
              << "d_bar: " << average_degree(in.graph) << "\n"
              << "components: " << connected_components(v) << "\n"
              << "self_loop_warnings: " << in.warnings.self_loops << "\n"
              << "duplicate_warnings: " << in.warnings.duplicate_edges << "\n";
    return 0;
}

int run_sweep(const CommonOpts& io, const std::vector<double>& ratios, int repeat,
              const std::string& out_path) {
    IngestResult in = ingest(io.input, io.features, io.labels);
    std::ostringstream csv;
    csv << "ratio,median_seconds,nodes_removed,edges_alive,final_ratio\n";
    for (double c : ratios) {
        std::vector<double> times;
        CoarseningReport last;
        long long edges_alive = 0;
        for (int k = 0; k < repeat; ++k) {
            WorkingGraph g = in.graph;
            SupernodeMap map(g.original_nodes());
            CoarseningConfig cfg = make_config(in, c, 0, -1, 16, 256, 0.0, 0);
            AggregatedAttributes agg;
            auto t0 = std::chrono::steady_clock::now();
            last = stpgc_for_gnn(g, map, cfg, in.attrs, agg);
            times.push_back(std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count());
            edges_alive = g.alive_edges();
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        csv << c << ',' << median << ',' << last.original_nodes - last.alive_nodes
            << ',' << edges_alive << ',' << last.final_ratio << '\n';
    }
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topology-preserving graph coarsening via graph collapse"};
    app.require_subcommand(1);

    CommonOpts io;
    double ratio = 1.0, drop_edge_ratio = 0.0;
    int theta1 = 0, theta2 = -1, exact_iters = 16, approx_iters = 256;
    uint64_t seed = 0;
    std::string out_dir = "stpgc_out", report_format = "json", out_path;
    int max_nodes = 200, repeat = 1;
    std::vector<double> ratios;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", io.input, "edge list path")->required();
        cmd->add_option("--features", io.features, "features CSV path");
        cmd->add_option("--labels", io.labels, "labels CSV path");
    };

    CLI::App* coarsen = app.add_subcommand("coarsen", "coarsen a graph");
    add_input(coarsen);
    coarsen->add_option("--ratio", ratio, "target coarsening ratio c")->check(CLI::Range(1e-9, 1.0));
    coarsen->add_option("--theta1", theta1, "degree threshold (default: 4x average degree)");
    coarsen->add_option("--theta2", theta2, "relaxation progress threshold (default: 1% of nodes)");
    coarsen->add_option("--exact-iters", exact_iters, "exact phase iteration cap");
    coarsen->add_option("--approx-iters", approx_iters, "approximate phase iteration cap");
    coarsen->add_option("--drop-edge-ratio", drop_edge_ratio, "export-time DropEdge ratio")
        ->check(CLI::Range(0.0, 0.999));
    coarsen->add_option("--seed", seed, "RNG seed");
    coarsen->add_option("--out-dir", out_dir, "output directory");
    coarsen->add_option("--report", report_format, "report format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* verify = app.add_subcommand("verify", "check Betti preservation");
    add_input(verify);
    verify->add_option("--max-nodes", max_nodes, "oracle scale guard");
    verify->add_option("--ratio", ratios, "ratio sweep for the beta1 curve CSV");
    verify->add_option("--out", out_path, "sweep CSV path (default stdout)");

    CLI::App* stats = app.add_subcommand("stats", "print graph statistics");
    add_input(stats);

    CLI::App* sweep = app.add_subcommand("sweep", "runtime/removal sweep over ratios");
    add_input(sweep);
    sweep->add_option("--ratios", ratios, "coarsening ratios")->required();
    sweep->add_option("--repeat", repeat, "repetitions per ratio (median reported)");
    sweep->add_option("--out", out_path, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (coarsen->parsed())
            return run_coarsen(io, ratio, theta1, theta2, exact_iters, approx_iters,
                               drop_edge_ratio, seed, out_dir, report_format);
        if (verify->parsed()) return run_verify(io, max_nodes, ratios, out_path);
        if (stats->parsed()) return run_stats(io);
        if (sweep->parsed()) return run_sweep(io, ratios, repeat, out_path);
    } catch (const OracleScaleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
