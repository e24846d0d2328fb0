#include "caproute/loaded_graph.hpp"

#include <algorithm>
#include <utility>

#include "caproute/errors.hpp"

namespace caproute {

NodeId LoadedGraph::id_of(std::string_view label) const {
    auto it = label_index.find(std::string(label));
    if (it == label_index.end())
        throw UnknownNodeError("unknown node '" + std::string(label) + "'");
    return it->second;
}

LoadedGraph make_loaded_graph(const std::vector<LabeledEdge>& edges,
                              const std::vector<std::string>& extra_nodes) {
    LoadedGraph out;
    auto intern = [&out](const std::string& label) -> NodeId {
        auto [it, inserted] =
            out.label_index.try_emplace(label, static_cast<NodeId>(out.labels.size()));
        if (inserted) out.labels.push_back(label);
        return it->second;
    };

    struct Raw {
        Edge e;
        double load;
    };
    std::vector<Raw> raw;
    raw.reserve(edges.size());
    for (const auto& le : edges) {
        if (le.load < 0.0)
            throw NegativeLoadError("negative load on edge " + le.u + " " + le.v);
        NodeId a = intern(le.u);
        NodeId b = intern(le.v);
        if (a == b) throw SelfLoopError("self loop at node '" + le.u + "'");
        raw.push_back({{std::min(a, b), std::max(a, b)}, le.load});
    }
    for (const auto& label : extra_nodes) intern(label);

    // Graph sorts its edge list; mirror that order so loads stay aligned.
    std::sort(raw.begin(), raw.end(),
              [](const Raw& x, const Raw& y) { return x.e < y.e; });
    for (size_t i = 1; i < raw.size(); ++i)
        if (raw[i].e == raw[i - 1].e)
            throw DuplicateEdgeError("duplicate edge " + out.labels[raw[i].e.u] + " " +
                                     out.labels[raw[i].e.v]);
    std::vector<Edge> es;
    es.reserve(raw.size());
    out.loads.reserve(raw.size());
    for (const auto& r : raw) {
        es.push_back(r.e);
        out.loads.push_back(r.load);
    }
    out.graph = Graph(static_cast<int>(out.labels.size()), std::move(es));
    return out;
}

NodeSet CongestedCore::to_original(const NodeSet& core_nodes) const {
    NodeSet out;
    out.reserve(core_nodes.size());
    for (NodeId v : core_nodes) out.push_back(origin[v]);
    return normalize_node_set(std::move(out));
}

CongestedCore congested_core(const LoadedGraph& g, double threshold) {
    CongestedCore cc;
    cc.threshold = threshold;

    std::vector<EdgeId> kept;
    for (EdgeId e = 0; e < g.graph.edge_count(); ++e)
        if (is_congested(g.loads[e], threshold)) kept.push_back(e);

    NodeSet nodes;
    for (EdgeId e : kept) {
        nodes.push_back(g.graph.edge(e).u);
        nodes.push_back(g.graph.edge(e).v);
    }
    nodes = normalize_node_set(std::move(nodes));

    std::vector<NodeId> to_new(g.graph.node_count(), -1);
    for (size_t i = 0; i < nodes.size(); ++i) to_new[nodes[i]] = static_cast<NodeId>(i);

    std::vector<Edge> es;
    es.reserve(kept.size());
    for (EdgeId e : kept)
        es.push_back({to_new[g.graph.edge(e).u], to_new[g.graph.edge(e).v]});

    // Kept edges are a subsequence of a sorted list and the relabeling is
    // order preserving, so es is already sorted and aligned with `kept`.
    cc.core = Graph(static_cast<int>(nodes.size()), std::move(es));
    cc.origin = std::move(nodes);
    cc.edge_origin = std::move(kept);
    return cc;
}

}  // namespace caproute
