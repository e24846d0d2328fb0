#pragma once

#include <string>
#include <vector>

#include "caproute/graph.hpp"
#include "caproute/loaded_graph.hpp"
#include "caproute/measure.hpp"
#include "caproute/rational.hpp"
#include "caproute/routing.hpp"

namespace caproute {

// Exhaustive-enumeration ceilings. Everything here is deliberately the
// obvious quadratic-to-exponential computation; the caps keep it honest.
inline constexpr int kOracleSubsetCap = 15;
inline constexpr int kOraclePathCap = 12;

struct ScoredSubgraph {
    NodeSet nodes;
    Rational value;
};

enum class DiscrepancyDirection {
    FastOnly,    // node in the checked cover but in no qualifying subgraph
    OracleOnly,  // node of a qualifying subgraph missing from the checked cover
};

struct Discrepancy {
    NodeId node;
    DiscrepancyDirection direction;
};

struct OracleReport {
    int node_count = 0;
    int edge_count = 0;
    std::string measure;
    Rational rho0;
    std::vector<ScoredSubgraph> qualifying;  // every nonempty S with value >= rho0
    NodeSet exact_cover;                     // union of the qualifying sets
    std::vector<Discrepancy> discrepancies;  // filled by check_cover
    bool sound = true;                       // no OracleOnly entries
    bool complete = true;                    // no FastOnly entries
};

// Measure value of every nonempty induced subgraph, in ascending bitmask
// order of the node subsets. The workhorse behind the other oracles; callers
// that sweep many rho0 values should reuse one enumeration.
std::vector<ScoredSubgraph> enumerate_subgraph_values(const Graph& g,
                                                      const MeasureExpr& m,
                                                      int max_nodes = kOracleSubsetCap);

// Definition-by-enumeration of the qualifying list and its union.
OracleReport enumerate_dense(const Graph& g, const MeasureExpr& m, const Rational& rho0,
                             int max_nodes = kOracleSubsetCap);

// enumerate_dense plus a node-by-node comparison against a cover produced by
// the fast path. Soundness failures (OracleOnly) are failures regardless of
// exactness claims; FastOnly nodes are admissible only for over-approximate
// covers.
OracleReport check_cover(const Graph& g, const MeasureExpr& m, const Rational& rho0,
                         const NodeSet& fast_cover, int max_nodes = kOracleSubsetCap);

// Reference solver: enumerate all simple s-t paths, keep those avoiding
// every qualifying subgraph of the congested core, return a minimum-weight
// one (lexicographically smallest sequence among ties).
RouteOutcome brute_force_cap(const LoadedGraph& g, double threshold,
                             const MeasureExpr& m, const Rational& rho0, NodeId s,
                             NodeId t, WeightPolicy policy = WeightPolicy::Unit,
                             int max_nodes = kOraclePathCap);

// Exact max clique size by pruned subset enumeration.
int brute_force_clique_number(const Graph& g, int max_nodes = kOracleSubsetCap);

}  // namespace caproute
