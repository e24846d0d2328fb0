#pragma once

#include <vector>

namespace caproute {

// Dinic max flow over integer capacities. Arc pairs are stored adjacently:
// arc i and i^1 are mutual reverses, so residual updates are index flips.
class MaxFlow {
public:
    explicit MaxFlow(int node_count);

    // Directed arc u -> v. Returns the arc index.
    int add_edge(int u, int v, long long cap);
    // Capacity `cap` in both directions (one arc pair).
    int add_undirected(int u, int v, long long cap);

    long long run(int s, int t);

    // After run(): nodes reachable from s in the residual graph. This is the
    // inclusion-minimal minimum-cut source side.
    std::vector<char> min_source_side(int s) const;

    // After run(): complement of the nodes that can still reach t in the
    // residual graph. This is the inclusion-maximal minimum-cut source side.
    std::vector<char> max_source_side(int t) const;

private:
    struct Arc {
        int to;
        long long cap;
    };
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<size_t> iter_;

    bool bfs(int s, int t);
    long long dfs(int v, int t, long long limit);
};

}  // namespace caproute
