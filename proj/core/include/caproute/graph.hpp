#pragma once

#include <span>
#include <vector>

namespace caproute {

using NodeId = int;
using EdgeId = int;

struct Edge {
    NodeId u = 0;  // u < v always
    NodeId v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A set of nodes, kept sorted and duplicate-free. Interpreted as the induced
// subgraph on those nodes wherever a subgraph is expected.
using NodeSet = std::vector<NodeId>;

NodeSet normalize_node_set(NodeSet nodes);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);
bool set_contains(const NodeSet& sorted, NodeId v);

// Undirected simple graph: no self-loops, no parallel edges. Nodes are dense
// integer ids [0, node_count). Edges are stored sorted with u < v; adjacency
// lists are sorted. Immutable after construction.
class Graph {
   public:
    Graph() = default;
    // Normalizes endpoint order and sorts the edge list. Throws
    // SelfLoopError / DuplicateEdgeError / UnknownNodeError on bad input.
    Graph(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
    int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(NodeId u, NodeId v) const;
    // Index into edges() for the pair, or -1.
    EdgeId edge_id(NodeId u, NodeId v) const;

    NodeSet all_nodes() const;

    friend bool operator==(const Graph&, const Graph&) = default;

   private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
};

// An induced subgraph re-indexed to [0, nodes.size()) together with the maps
// back into the host graph. nodes is sorted, so new id i corresponds to host
// node nodes[i]; edge_origin[e] is the host edge behind subgraph edge e.
struct InducedSubgraph {
    Graph graph;
    NodeSet nodes;
    std::vector<EdgeId> edge_origin;
};

InducedSubgraph induced(const Graph& g, const NodeSet& nodes);

// Plain-graph forms. remove_nodes ignores ids not present in g.
Graph induced_subgraph(const Graph& g, const NodeSet& nodes);
Graph remove_nodes(const Graph& g, const NodeSet& nodes);

// Connected components as sorted node sets, ordered by smallest contained id.
std::vector<NodeSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace caproute
