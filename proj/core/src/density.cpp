#include "caproute/density.hpp"

#include <algorithm>

#include "caproute/errors.hpp"
#include "caproute/mincut.hpp"

namespace caproute {

namespace {

void require_nonempty(const Graph& s) {
    if (s.node_count() == 0) throw EmptyGraphError("density of the empty graph is undefined");
}

}  // namespace

Rational edge_density(const Graph& s) {
    require_nonempty(s);
    return Rational(s.edge_count(), s.node_count());
}

Rational min_degree(const Graph& s) {
    require_nonempty(s);
    int d = s.degree(0);
    for (NodeId v = 1; v < s.node_count(); ++v) d = std::min(d, s.degree(v));
    return Rational(d);
}

long long count_k_cliques(const Graph& s, int k) {
    if (k < 2) throw InvalidParameterError("clique size must be >= 2");
    if (k > kMaxCliqueSize)
        throw InvalidParameterError("clique size " + std::to_string(k) + " exceeds cap " +
                                    std::to_string(kMaxCliqueSize));
    // Each clique is counted once at its smallest node: extend only with
    // strictly larger mutual neighbors.
    int n = s.node_count();
    std::vector<std::vector<NodeId>> later(n);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId u : s.neighbors(v))
            if (u > v) later[v].push_back(u);

    long long count = 0;
    auto rec = [&](auto&& self, const std::vector<NodeId>& pool, int depth) -> void {
        if (depth == k) {
            ++count;
            return;
        }
        for (NodeId v : pool) {
            std::vector<NodeId> next;
            std::set_intersection(pool.begin(), pool.end(), later[v].begin(), later[v].end(),
                                  std::back_inserter(next));
            if (static_cast<int>(next.size()) >= k - depth - 1) self(self, next, depth + 1);
        }
    };
    for (NodeId v = 0; v < n; ++v)
        if (static_cast<int>(later[v].size()) >= k - 1) rec(rec, later[v], 1);
    return count;
}

Rational k_clique_density(const Graph& s, int k) {
    require_nonempty(s);
    return Rational(count_k_cliques(s, k), s.node_count());
}

Rational squared_degree_density(const Graph& s) {
    require_nonempty(s);
    long long sum = 0;
    for (NodeId v = 0; v < s.node_count(); ++v) {
        long long d = s.degree(v);
        sum += d * d;
    }
    return Rational(sum, s.node_count());
}

Rational edge_connectivity(const Graph& s) {
    require_nonempty(s);
    return Rational(edge_connectivity_value(s));
}

Rational eval_measure(const MeasureExpr& m, const Graph& s) {
    switch (m.kind) {
        case MeasureKind::EdgeDensity: return edge_density(s);
        case MeasureKind::MinDegree: return min_degree(s);
        case MeasureKind::KCliqueDensity: return k_clique_density(s, m.k);
        case MeasureKind::SquaredDegree: return squared_degree_density(s);
        case MeasureKind::EdgeConnectivity: return edge_connectivity(s);
        case MeasureKind::Min:
        case MeasureKind::Max: {
            Rational acc = eval_measure(*m.children[0], s);
            for (size_t i = 1; i < m.children.size(); ++i) {
                Rational x = eval_measure(*m.children[i], s);
                bool take = m.kind == MeasureKind::Min ? x < acc : x > acc;
                if (take) acc = x;
            }
            return acc;
        }
    }
    throw InvalidParameterError("unreachable measure kind");
}

Rational eval_measure_on(const MeasureExpr& m, const Graph& g, const NodeSet& nodes) {
    return eval_measure(m, induced_subgraph(g, nodes));
}

}  // namespace caproute
