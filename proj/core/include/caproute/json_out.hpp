#pragma once

#include <string>
#include <vector>

#include "caproute/dense.hpp"
#include "caproute/loaded_graph.hpp"
#include "caproute/oracle.hpp"
#include "caproute/routing.hpp"
#include "caproute/sim.hpp"

namespace caproute {

// Machine-readable render of every result type. All node output is by
// label; node sets come out sorted lexicographically and component lists
// ordered by their smallest label, so equal results are byte-identical.
using Labels = std::vector<std::string>;

std::string congested_core_to_json(const LoadedGraph& g, const CongestedCore& cc);
std::string core_numbers_to_json(const std::vector<int>& core_numbers, const Labels& labels);
std::string node_set_to_json(const char* key, const NodeSet& nodes, const Labels& labels);
std::string cover_to_json(const DenseCover& cover, const Labels& labels);
std::string densest_to_json(const DensestResult& r, const Labels& labels);
std::string route_to_json(const RouteOutcome& r, const Labels& labels, double threshold,
                          const std::string& measure);
std::string density_index_to_json(const DensityIndexResult& r, double threshold,
                                  const std::string& measure);
std::string oracle_report_to_json(const OracleReport& rep, const Labels& labels);
std::string comparison_to_json(const ComparisonReport& rep, const LoadedGraph& g);
std::string comparison_to_csv(const ComparisonReport& rep, const LoadedGraph& g);

}  // namespace caproute
