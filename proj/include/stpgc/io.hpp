#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "stpgc/graph.hpp"
#include "stpgc/pipeline.hpp"

namespace stpgc {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct IngestResult {
    WorkingGraph graph;
    AttributedData attrs;
    std::vector<long long> external_ids;              // internal -> external
    std::unordered_map<long long, NodeId> internal_of;
    IngestWarnings warnings;
};

// Edge-list ingestion: whitespace-separated "u v" per line, '#'/'%' comment
// lines ignored. Directed edges are symmetrized; self-loops and duplicates
// dropped with counted warnings. External ids are remapped to dense internal
// ids in first-appearance order.
IngestResult ingest(const std::string& edge_path,
                    const std::string& features_path = "",
                    const std::string& labels_path = "");

// Renderers produce the exact bytes the writers emit; handy for
// byte-identity checks.
std::string render_edge_list(const WorkingGraph& g,
                             const std::vector<long long>& external_ids);
std::string render_partition_csv(const SupernodeMap& map,
                                 const std::vector<long long>& external_ids);
std::string render_features_csv(const AggregatedAttributes& agg,
                                const std::vector<long long>& external_ids);
std::string render_labels_csv(const AggregatedAttributes& agg,
                              const std::vector<long long>& external_ids);
std::string report_to_json(const CoarseningReport& report);
std::string report_to_text(const CoarseningReport& report);

void write_file(const std::string& path, const std::string& content);

// CLI parameter defaults: theta1 ~ 4x average degree, theta2 = 1% of nodes.
int default_theta1(double average_degree);
int default_theta2(int node_count);

}  // namespace stpgc
