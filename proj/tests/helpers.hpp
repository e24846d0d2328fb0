#pragma once

// Shared test scaffolding: deterministic generators and small independent
// verifiers. Everything here recomputes from first principles; nothing calls
// the algorithms under test.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "caproute/graph.hpp"
#include "caproute/loaded_graph.hpp"
#include "caproute/rational.hpp"

namespace testutil {

using caproute::Edge;
using caproute::Graph;
using caproute::NodeId;
using caproute::NodeSet;
using caproute::Rational;

struct TRng {
    std::mt19937_64 gen;
    explicit TRng(std::uint64_t seed) : gen(seed) {}
    double next01() { return (gen() >> 11) * 0x1.0p-53; }
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, std::move(es));
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    es.push_back({0, n - 1});
    return Graph(n, std::move(es));
}

inline Graph random_graph(TRng& rng, int n, double p) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next01() < p) es.push_back({u, v});
    return Graph(n, std::move(es));
}

inline caproute::LoadedGraph random_loaded_graph(TRng& rng, int n, double p) {
    std::vector<caproute::LabeledEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next01() < p)
                es.push_back({std::to_string(u), std::to_string(v), rng.next01()});
    std::vector<std::string> all;
    for (int v = 0; v < n; ++v) all.push_back(std::to_string(v));
    return caproute::make_loaded_graph(es, all);
}

inline NodeSet mask_nodes(unsigned mask) {
    NodeSet out;
    for (int v = 0; mask >> v; ++v)
        if (mask >> v & 1u) out.push_back(v);
    return out;
}

// Edge connectivity by Menger's theorem: minimum over all node pairs of the
// number of edge-disjoint paths, counted with an augmenting-path flow over a
// capacity matrix. Deliberately unrelated to the contraction algorithm under
// test.
inline int unit_maxflow_matrix(std::vector<std::vector<int>> cap, int s, int t) {
    const int n = static_cast<int>(cap.size());
    int flow = 0;
    while (true) {
        std::vector<int> prev(n, -1);
        prev[s] = s;
        std::vector<int> queue = {s};
        for (size_t qi = 0; qi < queue.size() && prev[t] == -1; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < n; ++v)
                if (prev[v] == -1 && cap[u][v] > 0) {
                    prev[v] = u;
                    queue.push_back(v);
                }
        }
        if (prev[t] == -1) return flow;
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
}

inline int menger_edge_connectivity(const Graph& g) {
    const int n = g.node_count();
    if (n <= 1) return 0;
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (const Edge& e : g.edges()) cap[e.u][e.v] = cap[e.v][e.u] = 1;
    int best = -1;
    for (int v = 1; v < n; ++v) {
        int f = unit_maxflow_matrix(cap, 0, v);
        if (best == -1 || f < best) best = f;
        if (best == 0) break;
    }
    return best;
}

inline int naive_min_degree(const Graph& g) {
    int best = -1;
    for (NodeId v : g.all_nodes())
        if (best == -1 || g.degree(v) < best) best = g.degree(v);
    return best < 0 ? 0 : best;
}

inline Rational naive_edge_density(const Graph& g) {
    return Rational(g.edge_count(), g.node_count());
}

inline Rational naive_squared_degree(const Graph& g) {
    std::int64_t sum = 0;
    for (NodeId v : g.all_nodes()) {
        std::int64_t d = g.degree(v);
        sum += d * d;
    }
    return Rational(sum, g.node_count());
}

// Counts k-cliques by direct enumeration of ascending k-tuples.
inline std::int64_t naive_clique_count(const Graph& g, int k, std::vector<NodeId>& picked) {
    if (static_cast<int>(picked.size()) == k) return 1;
    std::int64_t total = 0;
    NodeId start = picked.empty() ? 0 : picked.back() + 1;
    for (NodeId v = start; v < g.node_count(); ++v) {
        bool ok = true;
        for (NodeId u : picked)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        picked.push_back(v);
        total += naive_clique_count(g, k, picked);
        picked.pop_back();
    }
    return total;
}

inline std::int64_t naive_clique_count(const Graph& g, int k) {
    std::vector<NodeId> picked;
    return naive_clique_count(g, k, picked);
}

}  // namespace testutil
