#include "caproute/mincut.hpp"

#include <limits>

#include "caproute/errors.hpp"

namespace caproute {

GlobalMinCut global_min_cut(const Graph& g) {
    int n = g.node_count();
    if (n < 2) throw InvalidParameterError("min cut needs at least 2 nodes");

    auto comps = connected_components(g);
    if (comps.size() > 1) return {0, comps.front()};

    // w[i][j]: total weight between supernodes i and j; groups[i]: original
    // nodes merged into supernode i.
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (const Edge& e : g.edges()) {
        w[e.u][e.v] += 1;
        w[e.v][e.u] += 1;
    }
    std::vector<NodeSet> groups(n);
    for (NodeId v = 0; v < n; ++v) groups[v] = {v};
    std::vector<char> alive(n, 1);

    GlobalMinCut best{std::numeric_limits<long long>::max(), {}};
    for (int phase = 0; phase < n - 1; ++phase) {
        // Maximum-adjacency order over the remaining supernodes; ties go to
        // the smallest id so runs are reproducible.
        std::vector<long long> w_in(n, 0);
        std::vector<char> in_a(n, 0);
        int prev = -1, last = -1;
        int remaining = 0;
        for (int v = 0; v < n; ++v) remaining += alive[v];
        long long last_w = 0;
        for (int step = 0; step < remaining; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (!alive[v] || in_a[v]) continue;
                if (pick < 0 || w_in[v] > w_in[pick]) pick = v;
            }
            in_a[pick] = 1;
            prev = last;
            last = pick;
            last_w = w_in[pick];
            for (int u = 0; u < n; ++u)
                if (alive[u] && !in_a[u]) w_in[u] += w[pick][u];
        }
        if (last_w < best.weight) best = {last_w, groups[last]};

        // Contract `last` into `prev`.
        for (int u = 0; u < n; ++u) {
            if (!alive[u] || u == last || u == prev) continue;
            w[prev][u] += w[last][u];
            w[u][prev] = w[prev][u];
        }
        groups[prev] = set_union(groups[prev], groups[last]);
        alive[last] = 0;
    }
    return best;
}

int edge_connectivity_value(const Graph& g) {
    if (g.node_count() == 0) throw EmptyGraphError("edge connectivity of empty graph");
    if (g.node_count() == 1) return 0;
    if (!is_connected(g)) return 0;
    return static_cast<int>(global_min_cut(g).weight);
}

}  // namespace caproute
