#pragma once

#include "caproute/graph.hpp"
#include "caproute/measure.hpp"
#include "caproute/rational.hpp"

namespace caproute {

// All evaluators require a nonempty graph and return exact rationals.
// Single-node values are all 0 (edge connectivity by convention, the rest
// arithmetically).
Rational edge_density(const Graph& s);             // |E| / |V|
Rational min_degree(const Graph& s);               // integer
Rational k_clique_density(const Graph& s, int k);  // (#k-cliques) / |V|
Rational squared_degree_density(const Graph& s);   // (sum of deg^2) / |V|
Rational edge_connectivity(const Graph& s);        // integer, 0 if disconnected

long long count_k_cliques(const Graph& s, int k);

// Leaf -> evaluator above; Min/Max -> fold over children.
Rational eval_measure(const MeasureExpr& m, const Graph& s);

// eval_measure on the subgraph induced by `nodes`.
Rational eval_measure_on(const MeasureExpr& m, const Graph& g, const NodeSet& nodes);

}  // namespace caproute
