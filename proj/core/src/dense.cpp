#include "caproute/dense.hpp"

#include <algorithm>
#include <limits>

#include "caproute/errors.hpp"
#include "caproute/maxflow.hpp"
#include "caproute/mincut.hpp"

namespace caproute {

std::vector<int> core_decomposition(const Graph& g) {
    int n = g.node_count();
    std::vector<int> deg(n), core(n, 0);
    for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> removed(n, 0);

    int level = 0;
    for (int round = 0; round < n; ++round) {
        NodeId pick = -1;
        for (NodeId v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        level = std::max(level, deg[pick]);
        core[pick] = level;
        removed[pick] = 1;
        for (NodeId u : g.neighbors(pick))
            if (!removed[u]) --deg[u];
    }
    return core;
}

NodeSet k_core(const Graph& g, int k) {
    std::vector<int> core = core_decomposition(g);
    NodeSet out;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (core[v] >= k) out.push_back(v);
    return out;
}

int degeneracy(const Graph& g) {
    if (g.node_count() == 0) throw EmptyGraphError("degeneracy of empty graph");
    std::vector<int> core = core_decomposition(g);
    return *std::max_element(core.begin(), core.end());
}

std::vector<NodeSet> maximal_k_edge_connected(const Graph& g, int k) {
    if (k < 1) throw InvalidParameterError("k must be >= 1");
    std::vector<NodeSet> out;
    std::vector<NodeSet> work = connected_components(g);
    while (!work.empty()) {
        NodeSet nodes = std::move(work.back());
        work.pop_back();
        if (nodes.size() < 2) continue;
        InducedSubgraph h = induced(g, nodes);
        GlobalMinCut cut = global_min_cut(h.graph);
        if (cut.weight >= k) {
            out.push_back(std::move(nodes));
            continue;
        }
        // Both sides of a minimum cut of a connected graph are connected, so
        // deleting the cut edges splits into exactly these two parts.
        NodeSet side, rest;
        for (NodeId v : cut.side) side.push_back(nodes[v]);
        side = normalize_node_set(std::move(side));
        rest = set_difference(nodes, side);
        work.push_back(std::move(side));
        work.push_back(std::move(rest));
    }
    std::sort(out.begin(), out.end(),
              [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
    return out;
}

std::vector<Rational> edge_density_candidates(const Graph& g) {
    std::vector<Rational> q;
    q.reserve(static_cast<size_t>(g.edge_count() + 1) * std::max(1, g.node_count()));
    for (long long b = 1; b <= g.node_count(); ++b)
        for (long long a = 0; a <= g.edge_count(); ++a) q.emplace_back(a, b);
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

namespace {

// Feasibility network for guard a/b: min cut equals
// n*m*b - 2*max_S(b|E(S)| - a|S|), S over node subsets (including empty).
// forced >= 0 pins that node to the source side via an uncuttable arc,
// turning the max into max over S containing it.
long long guard_cut_value(const Graph& g, long long a, long long b, NodeId forced,
                          std::vector<char>* max_side) {
    const int n = g.node_count();
    const long long m = g.edge_count();
    const int s = n, t = n + 1;
    MaxFlow mf(n + 2);
    const long long inf = std::numeric_limits<long long>::max() / 4;
    for (NodeId v = 0; v < n; ++v) {
        mf.add_edge(s, v, v == forced ? inf : m * b);
        mf.add_edge(v, t, m * b + 2 * a - b * g.degree(v));
    }
    for (const Edge& e : g.edges()) mf.add_undirected(e.u, e.v, b);
    long long cut = mf.run(s, t);
    if (max_side) *max_side = mf.max_source_side(t);
    return cut;
}

}  // namespace

DensestResult densest_subgraph(const Graph& g) {
    if (g.node_count() == 0) throw EmptyGraphError("densest subgraph of empty graph");
    if (g.edge_count() == 0)
        throw InvalidParameterError("densest subgraph of edgeless graph is trivial");

    std::vector<Rational> q = edge_density_candidates(g);
    const long long nmb_base = static_cast<long long>(g.node_count()) * g.edge_count();

    // Largest candidate q[i] such that some subgraph has density >= q[i].
    // Because every achievable density is a candidate, "density >= q[i]"
    // equals "density > q[i-1]", a strict test the cut decides.
    auto strictly_beatable = [&](const Rational& guard) {
        long long cut = guard_cut_value(g, guard.num(), guard.den(), -1, nullptr);
        return cut < nmb_base * guard.den();
    };
    size_t lo = 0, hi = q.size() - 1;
    while (lo < hi) {
        size_t mid = lo + (hi - lo + 1) / 2;
        if (strictly_beatable(q[mid - 1]))
            lo = mid;
        else
            hi = mid - 1;
    }
    Rational best = q[lo];

    std::vector<char> side;
    guard_cut_value(g, best.num(), best.den(), -1, &side);
    NodeSet nodes;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (side[v]) nodes.push_back(v);
    return {std::move(nodes), best};
}

NodeSet edge_density_cover(const Graph& g, const Rational& rho0) {
    const int n = g.node_count();
    if (rho0 <= Rational(0)) return g.all_nodes();
    if (n == 0 || g.edge_count() == 0) return {};

    // Snap rho0 up to the candidate grid: subgraph densities only take
    // candidate values, so the qualifying sets are unchanged and the guard's
    // numerator/denominator stay small.
    std::vector<Rational> q = edge_density_candidates(g);
    auto it = std::lower_bound(q.begin(), q.end(), rho0);
    if (it == q.end()) return {};
    Rational guard = *it;

    DensestResult densest = densest_subgraph(g);
    if (densest.density < guard) return {};

    const long long nmb = static_cast<long long>(n) * g.edge_count() * guard.den();
    NodeSet cover = densest.nodes;
    for (NodeId v = 0; v < n; ++v) {
        if (set_contains(cover, v)) continue;
        long long cut = guard_cut_value(g, guard.num(), guard.den(), v, nullptr);
        if (cut <= nmb) cover.push_back(v);
    }
    return normalize_node_set(std::move(cover));
}

namespace {

void validate_cover_measure(const MeasureExpr& m) {
    if (m.kind == MeasureKind::KCliqueDensity || m.kind == MeasureKind::SquaredDegree)
        throw UnsupportedMeasureError(
            "no polynomial listing for '" + measure_to_string(m) +
            "'; supported cover leaves: edge, mindeg, conn");
    for (const auto& c : m.children) validate_cover_measure(*c);
}

// Cover node set for `m` at rho0 on g; bare recursion without bookkeeping.
NodeSet cover_nodes(const Graph& g, const MeasureExpr& m, const Rational& rho0,
                    bool& exact);

NodeSet min_fixpoint(const Graph& g, const MeasureExpr& m, const Rational& rho0) {
    NodeSet x = g.all_nodes();
    for (;;) {
        NodeSet next = x;
        for (const auto& child : m.children) {
            InducedSubgraph sub = induced(g, next);
            bool child_exact = true;
            NodeSet local = cover_nodes(sub.graph, *child, rho0, child_exact);
            NodeSet mapped;
            mapped.reserve(local.size());
            for (NodeId v : local) mapped.push_back(sub.nodes[v]);
            next = normalize_node_set(std::move(mapped));
        }
        if (next == x) return x;
        x = std::move(next);
    }
}

NodeSet cover_nodes(const Graph& g, const MeasureExpr& m, const Rational& rho0,
                    bool& exact) {
    if (g.node_count() == 0) return {};
    if (rho0 <= Rational(0)) return g.all_nodes();
    switch (m.kind) {
        case MeasureKind::MinDegree:
            return k_core(g, static_cast<int>(rho0.ceil()));
        case MeasureKind::EdgeConnectivity: {
            NodeSet out;
            for (const NodeSet& c :
                 maximal_k_edge_connected(g, static_cast<int>(rho0.ceil())))
                out = set_union(out, c);
            return out;
        }
        case MeasureKind::EdgeDensity:
            return edge_density_cover(g, rho0);
        case MeasureKind::Max: {
            NodeSet out;
            for (const auto& c : m.children)
                out = set_union(out, cover_nodes(g, *c, rho0, exact));
            return out;
        }
        case MeasureKind::Min: {
            NodeSet out = min_fixpoint(g, m, rho0);
            if (!out.empty()) exact = false;
            return out;
        }
        default:
            throw UnsupportedMeasureError("unsupported cover leaf");
    }
}

}  // namespace

DenseCover dense_cover(const Graph& g, const MeasureExpr& m, const Rational& rho0) {
    if (rho0 < Rational(0)) throw InvalidParameterError("rho0 must be >= 0");
    validate_cover_measure(m);

    DenseCover out;
    out.measure = measure_to_string(m);
    out.rho0 = rho0;

    if (g.node_count() == 0) return out;

    if (rho0 <= Rational(0)) {
        out.cover = g.all_nodes();
        out.components = {out.cover};
        return out;
    }

    switch (m.kind) {
        case MeasureKind::MinDegree: {
            NodeSet core = k_core(g, static_cast<int>(rho0.ceil()));
            if (!core.empty()) out.components = {core};
            out.cover = std::move(core);
            break;
        }
        case MeasureKind::EdgeConnectivity: {
            out.components = maximal_k_edge_connected(g, static_cast<int>(rho0.ceil()));
            for (const NodeSet& c : out.components) out.cover = set_union(out.cover, c);
            break;
        }
        case MeasureKind::EdgeDensity: {
            NodeSet cov = edge_density_cover(g, rho0);
            if (!cov.empty()) out.components = {cov};
            out.cover = std::move(cov);
            break;
        }
        case MeasureKind::Min:
        case MeasureKind::Max: {
            bool exact = true;
            NodeSet cov = cover_nodes(g, m, rho0, exact);
            if (!exact) out.exactness = Exactness::OverApproximate;
            if (!cov.empty()) out.components = {cov};
            out.cover = std::move(cov);
            break;
        }
        default:
            throw UnsupportedMeasureError("unsupported cover leaf");
    }
    return out;
}

}  // namespace caproute
