#include "stpgc/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace stpgc {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#' || c == '%';
    }
    return true;  // blank
}

std::string fmt_double(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

}  // namespace

IngestResult ingest(const std::string& edge_path,
                    const std::string& features_path,
                    const std::string& labels_path) {
    std::ifstream in(edge_path);
    if (!in) throw IoError("cannot open edge list: " + edge_path);

    std::vector<long long> external_ids;
    std::unordered_map<long long, NodeId> internal_of;
    auto intern = [&](long long ext) {
        auto [it, fresh] = internal_of.try_emplace(ext, static_cast<NodeId>(external_ids.size()));
        if (fresh) external_ids.push_back(ext);
        return it->second;
    };

    IngestWarnings warnings;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::unordered_set<uint64_t> seen;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) {
            ++warnings.comment_lines;
            continue;
        }
        std::istringstream ss(line);
        long long a, b;
        if (!(ss >> a >> b))
            throw IoError(edge_path + ":" + std::to_string(line_no) + ": unparseable edge line");
        if (a == b) {
            ++warnings.self_loops;
            continue;
        }
        NodeId x = intern(a), y = intern(b);
        uint64_t key = (static_cast<uint64_t>(std::min(x, y)) << 32) |
                       static_cast<uint32_t>(std::max(x, y));
        if (!seen.insert(key).second) {
            ++warnings.duplicate_edges;
            continue;
        }
        edges.emplace_back(x, y);
    }

    const int n = static_cast<int>(external_ids.size());
    IngestResult result{WorkingGraph(n), {}, std::move(external_ids),
                        std::move(internal_of), warnings};
    for (auto [x, y] : edges) result.graph.insert_edge(x, y);

    if (!features_path.empty()) {
        std::ifstream ff(features_path);
        if (!ff) throw IoError("cannot open features file: " + features_path);
        std::vector<char> covered(n, 0);
        line_no = 0;
        while (std::getline(ff, line)) {
            ++line_no;
            if (is_comment_or_blank(line)) continue;
            auto fields = split_csv(line);
            if (fields.size() < 2)
                throw IoError(features_path + ":" + std::to_string(line_no) + ": need id plus features");
            long long ext;
            try {
                ext = std::stoll(fields[0]);
            } catch (const std::exception&) {
                throw IoError(features_path + ":" + std::to_string(line_no) + ": bad external id");
            }
            auto it = result.internal_of.find(ext);
            if (it == result.internal_of.end()) continue;  // node absent from the graph
            const int dim = static_cast<int>(fields.size()) - 1;
            if (result.attrs.dim == 0) {
                result.attrs.dim = dim;
                result.attrs.features.assign(static_cast<size_t>(n) * dim, 0.0);
            } else if (dim != result.attrs.dim) {
                throw IoError(features_path + ":" + std::to_string(line_no) +
                              ": feature dimension mismatch (" + std::to_string(dim) +
                              " vs " + std::to_string(result.attrs.dim) + ")");
            }
            double* row = result.attrs.features.data() +
                          static_cast<size_t>(it->second) * result.attrs.dim;
            for (int j = 0; j < dim; ++j) {
                try {
                    row[j] = std::stod(fields[j + 1]);
                } catch (const std::exception&) {
                    throw IoError(features_path + ":" + std::to_string(line_no) + ": bad numeric value");
                }
            }
            covered[it->second] = 1;
        }
        for (NodeId u = 0; u < n; ++u)
            if (!covered[u])
                throw IoError(features_path + ": missing feature row for external id " +
                              std::to_string(result.external_ids[u]));
    }

    if (!labels_path.empty()) {
        std::ifstream lf(labels_path);
        if (!lf) throw IoError("cannot open labels file: " + labels_path);
        result.attrs.labels.assign(n, -1);
        line_no = 0;
        while (std::getline(lf, line)) {
            ++line_no;
            if (is_comment_or_blank(line)) continue;
            auto fields = split_csv(line);
            if (fields.size() != 2)
                throw IoError(labels_path + ":" + std::to_string(line_no) + ": expected external_id,label");
            try {
                long long ext = std::stoll(fields[0]);
                int label = std::stoi(fields[1]);
                if (label < 0)
                    throw IoError(labels_path + ":" + std::to_string(line_no) + ": negative label");
                auto it = result.internal_of.find(ext);
                if (it != result.internal_of.end()) result.attrs.labels[it->second] = label;
            } catch (const IoError&) {
                throw;
            } catch (const std::exception&) {
                throw IoError(labels_path + ":" + std::to_string(line_no) + ": unparseable label line");
            }
        }
    }
    return result;
}

std::string render_edge_list(const WorkingGraph& g,
                             const std::vector<long long>& external_ids) {
    std::ostringstream out;
    for (const auto& [x, y] : g.alive_edge_list())
        out << external_ids[x] << ' ' << external_ids[y] << '\n';
    return out.str();
}

std::string render_partition_csv(const SupernodeMap& map,
                                 const std::vector<long long>& external_ids) {
    std::ostringstream out;
    out << "external_id,supernode_external_id\n";
    for (NodeId u = 0; u < map.original_nodes(); ++u)
        out << external_ids[u] << ',' << external_ids[map.supernode_of(u)] << '\n';
    return out.str();
}

std::string render_features_csv(const AggregatedAttributes& agg,
                                const std::vector<long long>& external_ids) {
    std::ostringstream out;
    for (size_t i = 0; i < agg.supernodes.size(); ++i) {
        out << external_ids[agg.supernodes[i]];
        const double* row = agg.features.data() + i * agg.dim;
        for (int j = 0; j < agg.dim; ++j) out << ',' << fmt_double(row[j]);
        out << '\n';
    }
    return out.str();
}

std::string render_labels_csv(const AggregatedAttributes& agg,
                              const std::vector<long long>& external_ids) {
    std::ostringstream out;
    out << "external_id,label\n";
    for (size_t i = 0; i < agg.supernodes.size(); ++i) {
        if (agg.labels[i] < 0) continue;
        out << external_ids[agg.supernodes[i]] << ',' << agg.labels[i] << '\n';
    }
    return out.str();
}

std::string report_to_json(const CoarseningReport& report) {
    nlohmann::json j;
    j["original_nodes"] = report.original_nodes;
    j["alive_nodes"] = report.alive_nodes;
    j["final_ratio"] = report.final_ratio;
    j["d_max"] = report.d_max;
    j["d_bar"] = report.d_bar;
    j["ratio_unreached"] = report.ratio_unreached;
    j["ingest_warnings"] = {{"self_loops", report.ingest_warnings.self_loops},
                            {"duplicate_edges", report.ingest_warnings.duplicate_edges},
                            {"comment_lines", report.ingest_warnings.comment_lines}};
    j["phase_log"] = nlohmann::json::array();
    for (const auto& p : report.phase_log) {
        j["phase_log"].push_back({{"phase", p.phase},
                                  {"nodes_removed", p.nodes_removed},
                                  {"edges_removed", p.edges_removed},
                                  {"edges_inserted", p.edges_inserted},
                                  {"r", p.r_value},
                                  {"wall_seconds", p.wall_seconds}});
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const CoarseningReport& report) {
    std::ostringstream out;
    out << "nodes: " << report.original_nodes << " -> " << report.alive_nodes
        << " (ratio " << fmt_double(report.final_ratio) << ")\n"
        << "d_max: " << report.d_max << "  d_bar: " << fmt_double(report.d_bar) << "\n";
    if (report.ratio_unreached) out << "warning: target ratio not reached\n";
    for (const auto& p : report.phase_log) {
        out << p.phase << ": -" << p.nodes_removed << " nodes, -" << p.edges_removed
            << " edges, +" << p.edges_inserted << " edges, r=" << p.r_value << ", "
            << fmt_double(p.wall_seconds) << "s\n";
    }
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
}

int default_theta1(double average_degree) {
    return std::max(1, static_cast<int>(std::llround(4.0 * average_degree)));
}

int default_theta2(int node_count) { return node_count / 100; }

}  // namespace stpgc
