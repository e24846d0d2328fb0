#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "caproute/graph.hpp"

namespace caproute {

// Network model: an undirected simple graph whose edges carry a relative
// traffic load (fraction of link capacity, >= 0; values above 1 mean the
// link is overloaded and are legal input). loads is indexed by EdgeId.
struct LoadedGraph {
    Graph graph;
    std::vector<std::string> labels;  // node id -> external label
    std::unordered_map<std::string, NodeId> label_index;
    std::vector<double> loads;

    NodeId id_of(std::string_view label) const;
    const std::string& label_of(NodeId v) const { return labels[v]; }
};

// Builds a LoadedGraph from labeled edge triples, assigning ids in label
// first-appearance order. extra_nodes lets callers add isolated nodes.
struct LabeledEdge {
    std::string u;
    std::string v;
    double load = 0.0;
};
LoadedGraph make_loaded_graph(const std::vector<LabeledEdge>& edges,
                              const std::vector<std::string>& extra_nodes = {});

// The congested core C(G): the subgraph keeping exactly the edges whose load
// is strictly greater than the threshold, restricted to nodes incident to at
// least one such edge. Node/edge ids are re-indexed; origin maps them back.
struct CongestedCore {
    Graph core;
    double threshold = 0.0;
    NodeSet origin;                  // core node id -> original node id
    std::vector<EdgeId> edge_origin;  // core edge id -> original edge id

    bool empty() const { return core.node_count() == 0; }
    // Translate a node set expressed in core ids back to original ids.
    NodeSet to_original(const NodeSet& core_nodes) const;
};

// Congestion comparison is strict: a link is congested when load > threshold,
// never at equality. Centralized so the convention is visible in one place.
inline constexpr bool kCongestionStrict = true;
inline bool is_congested(double load, double threshold) { return load > threshold; }

CongestedCore congested_core(const LoadedGraph& g, double threshold);

}  // namespace caproute
