#pragma once

#include <string>
#include <vector>

#include "caproute/graph.hpp"
#include "caproute/measure.hpp"
#include "caproute/rational.hpp"

namespace caproute {

// Core number per node via deterministic minimum-degree peeling (smallest id
// first among ties). Empty graph gives an empty vector.
std::vector<int> core_decomposition(const Graph& g);

// {v : core_number(v) >= k}; the unique maximal node set whose induced
// subgraph has min degree >= k. k = 0 gives V(g).
NodeSet k_core(const Graph& g, int k);

// Largest k with a nonempty k-core. Requires >= 1 node.
int degeneracy(const Graph& g);

// All maximal node sets inducing k-edge-connected subgraphs, k >= 1.
// Pairwise disjoint, singletons excluded, sorted by smallest contained id.
// Found by recursive splitting along minimum cuts of value < k.
std::vector<NodeSet> maximal_k_edge_connected(const Graph& g, int k);

// Every value |E(S)|/|S| of a subgraph lies in {a/b : 0<=a<=|E|, 1<=b<=|V|};
// returned sorted, deduplicated.
std::vector<Rational> edge_density_candidates(const Graph& g);

struct DensestResult {
    NodeSet nodes;     // the unique maximal densest node set
    Rational density;  // max over nonempty S of |E(S)|/|S|
};

// Exact max edge density and its maximal achiever, by binary search over
// candidate densities with a min-cut feasibility test per guard.
// Requires >= 1 node and >= 1 edge.
DensestResult densest_subgraph(const Graph& g);

// {v : some S containing v has |E(S)|/|S| >= rho0}, exactly. Computed by an
// anchored variant of the feasibility cut that forces v into the source side.
NodeSet edge_density_cover(const Graph& g, const Rational& rho0);

enum class Exactness { Exact, OverApproximate };

// Union of the maximal subgraphs with measure value >= rho0. Soundness is
// unconditional: every qualifying subgraph's nodes lie inside `cover`. When
// exactness is Exact, every cover node also lies in some qualifying subgraph.
struct DenseCover {
    std::vector<NodeSet> components;  // leaf semantics; combinators report {cover}
    NodeSet cover;
    Exactness exactness = Exactness::Exact;
    std::string measure;  // canonical expression text
    Rational rho0;
};

// Leaves MinDegree (ceil(rho0)-core), EdgeConnectivity (maximal components),
// EdgeDensity (anchored union) are exact. Max takes the union of child
// covers; Min iterates mutual restriction to a fixpoint and is an
// over-approximation unless empty. KCliqueDensity / SquaredDegree leaves are
// rejected: no polynomial listing is available for them.
DenseCover dense_cover(const Graph& g, const MeasureExpr& m, const Rational& rho0);

}  // namespace caproute
