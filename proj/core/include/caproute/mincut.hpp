#pragma once

#include "caproute/graph.hpp"

namespace caproute {

struct GlobalMinCut {
    long long weight = 0;
    NodeSet side;  // one side of an optimal cut, never empty or all of V
};

// Deterministic Stoer-Wagner contraction over unit edge weights.
// Disconnected input yields weight 0 with one connected component as side.
// Requires >= 2 nodes.
GlobalMinCut global_min_cut(const Graph& g);

// lambda(g): 0 for a single node (convention) and for disconnected graphs.
// Requires >= 1 node.
int edge_connectivity_value(const Graph& g);

}  // namespace caproute
