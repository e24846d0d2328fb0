#pragma once

#include <vector>

#include "caproute/dense.hpp"
#include "caproute/graph.hpp"
#include "caproute/loaded_graph.hpp"
#include "caproute/measure.hpp"
#include "caproute/rational.hpp"

namespace caproute {

enum class WeightPolicy { Unit, Load };

enum class NoPathReason { EndpointRemoved, Disconnected };

struct Path {
    std::vector<NodeId> nodes;  // simple, consecutive nodes adjacent
    double weight = 0.0;        // sum of traversed edge weights
};

// A found path always avoids the whole cover, hence every qualifying
// subgraph (cover soundness is unconditional). A no-path verdict proves that
// no qualifying-subgraph-avoiding path exists only when `certified` is true,
// i.e. the cover was exact; an over-approximate cover may have blocked more
// than necessary.
struct RouteOutcome {
    enum class Status { Found, NoPath };
    Status status = Status::NoPath;
    Path path;                                      // Found only
    NoPathReason reason = NoPathReason::Disconnected;  // NoPath only
    bool certified = true;
    Rational rho0_used;
    NodeSet cover;  // removed nodes, in the routed graph's ids
    WeightPolicy policy = WeightPolicy::Unit;

    bool found() const { return status == Status::Found; }
};

std::vector<double> edge_weights(const LoadedGraph& g, WeightPolicy policy);

// Minimum-weight s-t path; among equal-weight paths the lexicographically
// smallest node sequence (by node id). Weights must be >= 0.
RouteOutcome dijkstra(const Graph& g, const std::vector<double>& weights, NodeId s,
                      NodeId t);

// The avoidance solver: build the congested core at `threshold`, cover it
// with dense_cover(m, rho0), map the cover back to g, and route s-t in g
// minus the cover. Endpoint inside the cover short-circuits to NoPath.
RouteOutcome route_with_density_index(const LoadedGraph& g, double threshold,
                                      const MeasureExpr& m, const Rational& rho0,
                                      NodeId s, NodeId t,
                                      WeightPolicy policy = WeightPolicy::Unit);

// Highest measure value attained by any subgraph of `core`. Exact for the
// leaf measures and Max trees; for Min trees returns the best witness value
// found on a threshold grid (a lower bound, which only enlarges the cover).
Rational max_core_density(const Graph& core, const MeasureExpr& m);

// Routing at rho0 = max_core_density: avoid the densest regions there are.
// An empty core degenerates to plain shortest path.
RouteOutcome cap_route(const LoadedGraph& g, double threshold, const MeasureExpr& m,
                       NodeId s, NodeId t, WeightPolicy policy = WeightPolicy::Unit);

struct DensityIndexResult {
    Rational value;              // smallest grid rho0 whose cover the path avoids
    std::vector<Rational> grid;  // candidate thresholds, ascending
};

// The safety index of a path: the smallest threshold rho0 such that the path
// avoids every subgraph of the congested core with measure >= rho0. 0 means
// the path misses the core entirely; lower is safer.
DensityIndexResult density_index(const LoadedGraph& g, double threshold,
                                 const MeasureExpr& m,
                                 const std::vector<NodeId>& path_nodes);

}  // namespace caproute
