#include "caproute/routing.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "caproute/density.hpp"
#include "caproute/errors.hpp"

namespace caproute {

std::vector<double> edge_weights(const LoadedGraph& g, WeightPolicy policy) {
    if (policy == WeightPolicy::Load) return g.loads;
    return std::vector<double>(g.graph.edge_count(), 1.0);
}

namespace {

std::vector<double> dist_to(const Graph& g, const std::vector<double>& w, NodeId t) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.node_count(), inf);
    using Item = std::pair<double, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[t] = 0.0;
    pq.push({0.0, t});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        for (NodeId u : g.neighbors(v)) {
            double nd = d + w[g.edge_id(u, v)];
            if (nd < dist[u]) {
                dist[u] = nd;
                pq.push({nd, u});
            }
        }
    }
    return dist;
}

// An edge (x,y) is tight when dist[x] == w(x,y) + dist[y] with the exact
// doubles Dijkstra produced; simple tight paths from s are precisely the
// minimum-weight s-t paths (exactly so for unit weights, where all sums are
// small integers). Every relaxation leaves at least one tight edge per node,
// so a completion always exists from any node with finite dist.
bool tight_completion_exists(const Graph& g, const std::vector<double>& w,
                             const std::vector<double>& dist, NodeId from, NodeId t,
                             const std::vector<char>& used) {
    if (from == t) return true;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : g.neighbors(x)) {
            if (seen[y] || used[y]) continue;
            if (dist[x] != w[g.edge_id(x, y)] + dist[y]) continue;
            if (y == t) return true;
            seen[y] = 1;
            stack.push_back(y);
        }
    }
    return false;
}

}  // namespace

RouteOutcome dijkstra(const Graph& g, const std::vector<double>& weights, NodeId s,
                      NodeId t) {
    if (s < 0 || s >= g.node_count() || t < 0 || t >= g.node_count())
        throw UnknownNodeError("endpoint out of range");
    if (s == t) throw InvalidParameterError("source equals target");
    if (static_cast<int>(weights.size()) != g.edge_count())
        throw InvalidParameterError("weight vector size mismatch");
    for (double w : weights)
        if (!(w >= 0.0)) throw InvalidParameterError("edge weights must be >= 0");

    RouteOutcome out;
    std::vector<double> dist = dist_to(g, weights, t);
    if (dist[s] == std::numeric_limits<double>::infinity()) {
        out.status = RouteOutcome::Status::NoPath;
        out.reason = NoPathReason::Disconnected;
        return out;
    }

    // Lexicographically smallest tight path: extend with the smallest unused
    // neighbor that still admits a tight completion to t. neighbors() is
    // sorted, so the first feasible candidate wins.
    std::vector<char> used(g.node_count(), 0);
    std::vector<NodeId> seq{s};
    used[s] = 1;
    NodeId cur = s;
    while (cur != t) {
        NodeId next = -1;
        for (NodeId y : g.neighbors(cur)) {
            if (used[y]) continue;
            if (dist[cur] != weights[g.edge_id(cur, y)] + dist[y]) continue;
            if (tight_completion_exists(g, weights, dist, y, t, used)) {
                next = y;
                break;
            }
        }
        if (next < 0) throw Error("internal: tight walk lost its completion");
        used[next] = 1;
        seq.push_back(next);
        cur = next;
    }

    out.status = RouteOutcome::Status::Found;
    out.path.nodes = std::move(seq);
    out.path.weight = dist[s];
    return out;
}

RouteOutcome route_with_density_index(const LoadedGraph& g, double threshold,
                                      const MeasureExpr& m, const Rational& rho0,
                                      NodeId s, NodeId t, WeightPolicy policy) {
    if (s < 0 || s >= g.graph.node_count() || t < 0 || t >= g.graph.node_count())
        throw UnknownNodeError("endpoint out of range");
    if (s == t) throw InvalidParameterError("source equals target");

    CongestedCore cc = congested_core(g, threshold);
    DenseCover cover = dense_cover(cc.core, m, rho0);

    RouteOutcome out;
    out.rho0_used = rho0;
    out.policy = policy;
    out.cover = cc.to_original(cover.cover);
    out.certified = cover.exactness == Exactness::Exact;

    if (set_contains(out.cover, s) || set_contains(out.cover, t)) {
        out.status = RouteOutcome::Status::NoPath;
        out.reason = NoPathReason::EndpointRemoved;
        return out;
    }

    InducedSubgraph rest = induced(g.graph, set_difference(g.graph.all_nodes(), out.cover));
    std::vector<double> w_full = edge_weights(g, policy);
    std::vector<double> w(rest.graph.edge_count());
    for (EdgeId e = 0; e < rest.graph.edge_count(); ++e) w[e] = w_full[rest.edge_origin[e]];

    std::vector<NodeId> to_new(g.graph.node_count(), -1);
    for (size_t i = 0; i < rest.nodes.size(); ++i) to_new[rest.nodes[i]] = static_cast<NodeId>(i);

    RouteOutcome inner = dijkstra(rest.graph, w, to_new[s], to_new[t]);
    if (!inner.found()) {
        out.status = RouteOutcome::Status::NoPath;
        out.reason = NoPathReason::Disconnected;
        return out;
    }
    out.status = RouteOutcome::Status::Found;
    out.path.weight = inner.path.weight;
    out.path.nodes.reserve(inner.path.nodes.size());
    for (NodeId v : inner.path.nodes) out.path.nodes.push_back(rest.nodes[v]);
    return out;
}

namespace {

Rational max_conn_density(const Graph& core) {
    if (core.node_count() == 0) return Rational(0);
    for (int k = degeneracy(core); k >= 1; --k)
        if (!maximal_k_edge_connected(core, k).empty()) return Rational(k);
    return Rational(0);
}

}  // namespace

Rational max_core_density(const Graph& core, const MeasureExpr& m) {
    if (core.node_count() == 0) return Rational(0);
    switch (m.kind) {
        case MeasureKind::MinDegree:
            return Rational(degeneracy(core));
        case MeasureKind::EdgeConnectivity:
            return max_conn_density(core);
        case MeasureKind::EdgeDensity:
            return core.edge_count() == 0 ? Rational(0) : densest_subgraph(core).density;
        case MeasureKind::Max: {
            Rational best(0);
            for (const auto& c : m.children) best = std::max(best, max_core_density(core, *c));
            return best;
        }
        case MeasureKind::Min: {
            // Scan integer thresholds downward; each nonempty fixpoint cover
            // is a witness subgraph, whose own measure bounds the optimum
            // from below. Undershooting only enlarges the avoided region.
            std::int64_t hi = 0;
            for (const MeasureExpr* leaf : measure_leaves(m))
                hi = std::max(hi, max_core_density(core, *leaf).ceil());
            Rational best(0);
            for (std::int64_t k = hi; k >= 1; --k) {
                DenseCover cov = dense_cover(core, m, Rational(k));
                if (cov.cover.empty()) continue;
                Rational witness = eval_measure(m, induced_subgraph(core, cov.cover));
                best = std::max(best, witness);
            }
            return best;
        }
        default:
            throw UnsupportedMeasureError("no maximal-density search for '" +
                                          measure_to_string(m) + "'");
    }
}

RouteOutcome cap_route(const LoadedGraph& g, double threshold, const MeasureExpr& m,
                       NodeId s, NodeId t, WeightPolicy policy) {
    CongestedCore cc = congested_core(g, threshold);
    if (cc.empty()) {
        if (s < 0 || s >= g.graph.node_count() || t < 0 || t >= g.graph.node_count())
            throw UnknownNodeError("endpoint out of range");
        if (s == t) throw InvalidParameterError("source equals target");
        RouteOutcome out = dijkstra(g.graph, edge_weights(g, policy), s, t);
        out.policy = policy;
        return out;
    }
    Rational rho_star = max_core_density(cc.core, m);
    return route_with_density_index(g, threshold, m, rho_star, s, t, policy);
}

DensityIndexResult density_index(const LoadedGraph& g, double threshold,
                                 const MeasureExpr& m,
                                 const std::vector<NodeId>& path_nodes) {
    if (path_nodes.empty()) throw InvalidParameterError("path must have >= 1 node");
    std::vector<char> seen(g.graph.node_count(), 0);
    for (size_t i = 0; i < path_nodes.size(); ++i) {
        NodeId v = path_nodes[i];
        if (v < 0 || v >= g.graph.node_count())
            throw UnknownNodeError("path node out of range");
        if (seen[v]) throw InvalidParameterError("path repeats a node");
        seen[v] = 1;
        if (i > 0 && !g.graph.has_edge(path_nodes[i - 1], v))
            throw InvalidParameterError("path nodes not adjacent");
    }

    CongestedCore cc = congested_core(g, threshold);
    DensityIndexResult out;
    if (cc.empty()) {
        out.value = Rational(0);
        out.grid = {Rational(0)};
        return out;
    }

    // Threshold grid: integers up to one past every leaf's maximum, plus the
    // full candidate set for edge-density leaves (whose covers move at
    // non-integer thresholds too).
    std::int64_t hi = 0;
    bool has_edge_leaf = false;
    for (const MeasureExpr* leaf : measure_leaves(m)) {
        if (leaf->kind == MeasureKind::EdgeDensity) has_edge_leaf = true;
        hi = std::max(hi, max_core_density(cc.core, *leaf).ceil());
    }
    std::vector<Rational> grid;
    for (std::int64_t k = 0; k <= hi + 1; ++k) grid.emplace_back(k);
    if (has_edge_leaf)
        for (const Rational& c : edge_density_candidates(cc.core))
            if (c < Rational(hi + 1)) grid.push_back(c);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    NodeSet path_set = normalize_node_set(path_nodes);
    auto avoids = [&](const Rational& rho0) {
        DenseCover cov = dense_cover(cc.core, m, rho0);
        return set_intersection(cc.to_original(cov.cover), path_set).empty();
    };

    // Covers shrink as rho0 grows, so `avoids` is monotone along the grid;
    // the top entry is past every achievable value and its cover is empty.
    size_t lo = 0, hi_i = grid.size() - 1;
    if (avoids(grid[0])) {
        out.value = grid[0];
        out.grid = std::move(grid);
        return out;
    }
    while (lo + 1 < hi_i) {
        size_t mid = lo + (hi_i - lo) / 2;
        if (avoids(grid[mid]))
            hi_i = mid;
        else
            lo = mid;
    }
    out.value = grid[hi_i];
    out.grid = std::move(grid);
    return out;
}

}  // namespace caproute
