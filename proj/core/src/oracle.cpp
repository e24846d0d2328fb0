#include "caproute/oracle.hpp"

#include <algorithm>

#include "caproute/density.hpp"
#include "caproute/errors.hpp"

namespace caproute {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw SizeLimitError(std::string(what) + ": " + std::to_string(n) +
                             " nodes exceed the cap of " + std::to_string(cap));
}

NodeSet mask_to_nodes(unsigned mask) {
    NodeSet nodes;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) nodes.push_back(v);
    return nodes;
}

}  // namespace

std::vector<ScoredSubgraph> enumerate_subgraph_values(const Graph& g,
                                                      const MeasureExpr& m,
                                                      int max_nodes) {
    check_cap(g.node_count(), std::min(max_nodes, kOracleSubsetCap), "subset enumeration");
    std::vector<ScoredSubgraph> out;
    const unsigned total = 1u << g.node_count();
    out.reserve(total - 1);
    for (unsigned mask = 1; mask < total; ++mask) {
        NodeSet nodes = mask_to_nodes(mask);
        out.push_back({nodes, eval_measure(m, induced_subgraph(g, nodes))});
    }
    return out;
}

OracleReport enumerate_dense(const Graph& g, const MeasureExpr& m, const Rational& rho0,
                             int max_nodes) {
    OracleReport rep;
    rep.node_count = g.node_count();
    rep.edge_count = g.edge_count();
    rep.measure = measure_to_string(m);
    rep.rho0 = rho0;
    if (g.node_count() == 0) return rep;
    for (ScoredSubgraph& s : enumerate_subgraph_values(g, m, max_nodes)) {
        if (s.value < rho0) continue;
        rep.exact_cover = set_union(rep.exact_cover, s.nodes);
        rep.qualifying.push_back(std::move(s));
    }
    return rep;
}

OracleReport check_cover(const Graph& g, const MeasureExpr& m, const Rational& rho0,
                         const NodeSet& fast_cover, int max_nodes) {
    OracleReport rep = enumerate_dense(g, m, rho0, max_nodes);
    for (NodeId v : set_difference(rep.exact_cover, fast_cover)) {
        rep.discrepancies.push_back({v, DiscrepancyDirection::OracleOnly});
        rep.sound = false;
    }
    for (NodeId v : set_difference(fast_cover, rep.exact_cover)) {
        rep.discrepancies.push_back({v, DiscrepancyDirection::FastOnly});
        rep.complete = false;
    }
    std::sort(rep.discrepancies.begin(), rep.discrepancies.end(),
              [](const Discrepancy& a, const Discrepancy& b) { return a.node < b.node; });
    return rep;
}

RouteOutcome brute_force_cap(const LoadedGraph& g, double threshold,
                             const MeasureExpr& m, const Rational& rho0, NodeId s,
                             NodeId t, WeightPolicy policy, int max_nodes) {
    const int n = g.graph.node_count();
    check_cap(n, std::min(max_nodes, kOraclePathCap), "path enumeration");
    if (s < 0 || s >= n || t < 0 || t >= n) throw UnknownNodeError("endpoint out of range");
    if (s == t) throw InvalidParameterError("source equals target");

    CongestedCore cc = congested_core(g, threshold);
    OracleReport dense = enumerate_dense(cc.core, m, rho0, kOracleSubsetCap);
    // A path avoids every qualifying subgraph exactly when it avoids their
    // union.
    NodeSet forbidden = cc.to_original(dense.exact_cover);

    RouteOutcome out;
    out.rho0_used = rho0;
    out.policy = policy;
    out.cover = forbidden;
    out.certified = true;

    if (set_contains(forbidden, s) || set_contains(forbidden, t)) {
        out.status = RouteOutcome::Status::NoPath;
        out.reason = NoPathReason::EndpointRemoved;
        return out;
    }

    std::vector<double> w = edge_weights(g, policy);
    bool have_best = false;
    double best_w = 0.0;
    std::vector<NodeId> best_seq, seq{s};
    std::vector<char> used(n, 0);
    used[s] = 1;

    auto dfs = [&](auto&& self, NodeId cur, double cur_w) -> void {
        if (have_best && cur_w > best_w) return;
        if (cur == t) {
            if (!have_best || cur_w < best_w || (cur_w == best_w && seq < best_seq)) {
                have_best = true;
                best_w = cur_w;
                best_seq = seq;
            }
            return;
        }
        for (NodeId y : g.graph.neighbors(cur)) {
            if (used[y] || set_contains(forbidden, y)) continue;
            used[y] = 1;
            seq.push_back(y);
            self(self, y, cur_w + w[g.graph.edge_id(cur, y)]);
            seq.pop_back();
            used[y] = 0;
        }
    };
    dfs(dfs, s, 0.0);

    if (!have_best) {
        out.status = RouteOutcome::Status::NoPath;
        out.reason = NoPathReason::Disconnected;
        return out;
    }
    out.status = RouteOutcome::Status::Found;
    out.path.nodes = std::move(best_seq);
    out.path.weight = best_w;
    return out;
}

int brute_force_clique_number(const Graph& g, int max_nodes) {
    check_cap(g.node_count(), std::min(max_nodes, kOracleSubsetCap), "clique search");
    if (g.node_count() == 0) throw EmptyGraphError("clique number of empty graph");
    int best = 0;
    const unsigned total = 1u << g.node_count();
    for (unsigned mask = 1; mask < total; ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        NodeSet nodes = mask_to_nodes(mask);
        bool clique = true;
        for (size_t i = 0; i < nodes.size() && clique; ++i)
            for (size_t j = i + 1; j < nodes.size() && clique; ++j)
                if (!g.has_edge(nodes[i], nodes[j])) clique = false;
        if (clique) best = size;
    }
    return best;
}

}  // namespace caproute
