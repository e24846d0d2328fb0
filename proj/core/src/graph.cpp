#include "caproute/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "caproute/errors.hpp"

namespace caproute {

NodeSet normalize_node_set(NodeSet nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const NodeSet& sorted, NodeId v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

Graph::Graph(int node_count, std::vector<Edge> edges) : node_count_(node_count) {
    for (auto& e : edges) {
        if (e.u == e.v) throw SelfLoopError("self-loop at node " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= node_count_)
            throw UnknownNodeError("edge endpoint out of range: " + std::to_string(e.v));
    }
    std::sort(edges.begin(), edges.end());
    if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
        throw DuplicateEdgeError("duplicate edge " + std::to_string(it->u) + "-" +
                                 std::to_string(it->v));
    edges_ = std::move(edges);
    adjacency_.resize(node_count_);
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(NodeId u, NodeId v) const { return edge_id(u, v) >= 0; }

EdgeId Graph::edge_id(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it != edges_.end() && *it == probe) return static_cast<EdgeId>(it - edges_.begin());
    return -1;
}

NodeSet Graph::all_nodes() const {
    NodeSet all(node_count_);
    for (int v = 0; v < node_count_; ++v) all[v] = v;
    return all;
}

InducedSubgraph induced(const Graph& g, const NodeSet& nodes) {
    NodeSet keep = normalize_node_set(nodes);
    for (NodeId v : keep)
        if (v < 0 || v >= g.node_count())
            throw UnknownNodeError("node " + std::to_string(v) + " not in graph");
    std::vector<NodeId> to_new(g.node_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) to_new[keep[i]] = static_cast<NodeId>(i);

    std::vector<Edge> edges;
    std::vector<EdgeId> edge_origin;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& he = g.edge(e);
        if (to_new[he.u] >= 0 && to_new[he.v] >= 0) {
            edges.push_back({to_new[he.u], to_new[he.v]});
            edge_origin.push_back(e);
        }
    }
    // Host edges are sorted and the relabeling is order-preserving, so the
    // new edge list is already sorted and edge_origin stays aligned.
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(keep.size()), std::move(edges));
    out.nodes = std::move(keep);
    out.edge_origin = std::move(edge_origin);
    return out;
}

Graph induced_subgraph(const Graph& g, const NodeSet& nodes) { return induced(g, nodes).graph; }

Graph remove_nodes(const Graph& g, const NodeSet& nodes) {
    NodeSet drop = normalize_node_set(nodes);
    drop.erase(std::remove_if(drop.begin(), drop.end(),
                              [&](NodeId v) { return v < 0 || v >= g.node_count(); }),
               drop.end());
    return induced_subgraph(g, set_difference(g.all_nodes(), drop));
}

std::vector<NodeSet> connected_components(const Graph& g) {
    std::vector<NodeSet> components;
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < g.node_count(); ++start) {
        if (seen[start]) continue;
        NodeSet comp;
        stack.push_back(start);
        seen[start] = true;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        components.push_back(normalize_node_set(std::move(comp)));
    }
    return components;
}

bool is_connected(const Graph& g) {
    return g.node_count() <= 1 || connected_components(g).size() == 1;
}

}  // namespace caproute
