#include "caproute/json_out.hpp"

#include <algorithm>

#include <json.hpp>

#include "caproute/io.hpp"

namespace caproute {

namespace {

using J = nlohmann::ordered_json;

std::vector<std::string> sorted_labels(const NodeSet& nodes, const Labels& labels) {
    std::vector<std::string> out;
    out.reserve(nodes.size());
    for (NodeId v : nodes) out.push_back(labels[v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> path_labels(const std::vector<NodeId>& path, const Labels& labels) {
    std::vector<std::string> out;
    out.reserve(path.size());
    for (NodeId v : path) out.push_back(labels[v]);
    return out;
}

const char* policy_name(WeightPolicy p) { return p == WeightPolicy::Unit ? "unit" : "load"; }

J route_json(const RouteOutcome& r, const Labels& labels, double threshold,
             const std::string& measure) {
    J j;
    j["status"] = r.found() ? "found" : "no_path";
    if (r.found()) {
        j["reason"] = nullptr;
        j["path"] = path_labels(r.path.nodes, labels);
        j["weight"] = r.path.weight;
    } else {
        j["reason"] = r.reason == NoPathReason::EndpointRemoved ? "endpoint_removed"
                                                                : "disconnected";
        j["path"] = nullptr;
        j["weight"] = nullptr;
    }
    j["certified"] = r.certified;
    j["rho0_used"] = r.rho0_used.str();
    j["cover_size"] = r.cover.size();
    j["settings"] = {{"congestion_comparison", "strict"},
                     {"threshold", threshold},
                     {"measure", measure},
                     {"weight_policy", policy_name(r.policy)},
                     {"exact_cover", r.certified}};
    return j;
}

}  // namespace

std::string congested_core_to_json(const LoadedGraph& g, const CongestedCore& cc) {
    J j;
    j["threshold"] = cc.threshold;
    j["congestion_comparison"] = "strict";
    j["nodes"] = sorted_labels(cc.origin, g.labels);
    auto& edges = j["edges"] = J::array();
    for (EdgeId e = 0; e < cc.core.edge_count(); ++e) {
        EdgeId orig = cc.edge_origin[e];
        const Edge& ed = g.graph.edge(orig);
        edges.push_back(
            {{"u", g.labels[ed.u]}, {"v", g.labels[ed.v]}, {"load", g.loads[orig]}});
    }
    return j.dump(2) + "\n";
}

std::string core_numbers_to_json(const std::vector<int>& core_numbers,
                                 const Labels& labels) {
    std::vector<std::pair<std::string, int>> rows;
    rows.reserve(core_numbers.size());
    for (size_t v = 0; v < core_numbers.size(); ++v)
        rows.push_back({labels[v], core_numbers[v]});
    std::sort(rows.begin(), rows.end());
    J j;
    auto& m = j["core_numbers"] = J::object();
    for (const auto& [label, k] : rows) m[label] = k;
    return j.dump(2) + "\n";
}

std::string node_set_to_json(const char* key, const NodeSet& nodes, const Labels& labels) {
    J j;
    j[key] = sorted_labels(nodes, labels);
    return j.dump(2) + "\n";
}

std::string cover_to_json(const DenseCover& cover, const Labels& labels) {
    J j;
    j["measure"] = cover.measure;
    j["rho0"] = cover.rho0.str();
    j["exact"] = cover.exactness == Exactness::Exact;
    std::vector<std::vector<std::string>> comps;
    comps.reserve(cover.components.size());
    for (const NodeSet& c : cover.components) comps.push_back(sorted_labels(c, labels));
    std::sort(comps.begin(), comps.end());
    j["components"] = comps;
    j["cover"] = sorted_labels(cover.cover, labels);
    return j.dump(2) + "\n";
}

std::string densest_to_json(const DensestResult& r, const Labels& labels) {
    J j;
    j["density"] = r.density.str();
    j["density_real"] = r.density.to_double();
    j["nodes"] = sorted_labels(r.nodes, labels);
    return j.dump(2) + "\n";
}

std::string route_to_json(const RouteOutcome& r, const Labels& labels, double threshold,
                          const std::string& measure) {
    return route_json(r, labels, threshold, measure).dump(2) + "\n";
}

std::string density_index_to_json(const DensityIndexResult& r, double threshold,
                                  const std::string& measure) {
    J j;
    j["value"] = r.value.str();
    j["value_real"] = r.value.to_double();
    j["measure"] = measure;
    j["threshold"] = threshold;
    auto& grid = j["grid"] = J::array();
    for (const Rational& x : r.grid) grid.push_back(x.str());
    return j.dump(2) + "\n";
}

std::string oracle_report_to_json(const OracleReport& rep, const Labels& labels) {
    J j;
    j["nodes"] = rep.node_count;
    j["edges"] = rep.edge_count;
    j["measure"] = rep.measure;
    j["rho0"] = rep.rho0.str();
    auto& q = j["qualifying"] = J::array();
    for (const ScoredSubgraph& s : rep.qualifying)
        q.push_back({{"nodes", sorted_labels(s.nodes, labels)}, {"value", s.value.str()}});
    j["cover"] = sorted_labels(rep.exact_cover, labels);
    auto& d = j["discrepancies"] = J::array();
    for (const Discrepancy& x : rep.discrepancies)
        d.push_back({{"node", labels[x.node]},
                     {"direction", x.direction == DiscrepancyDirection::FastOnly
                                       ? "fast_only"
                                       : "oracle_only"}});
    j["sound"] = rep.sound;
    j["complete"] = rep.complete;
    return j.dump(2) + "\n";
}

std::string comparison_to_json(const ComparisonReport& rep, const LoadedGraph& g) {
    J j;
    j["config"] = J::parse(scenario_config_to_json(rep.config));
    j["cover"] = sorted_labels(rep.cover, g.labels);
    j["cover_exact"] = rep.cover_exact;
    j["aggregates"] = {{"frac_local_hit_cover", rep.frac_local_hit_cover},
                       {"mean_hop_stretch", rep.mean_hop_stretch},
                       {"frac_global_no_path", rep.frac_global_no_path}};
    auto& qs = j["queries"] = J::array();
    for (size_t i = 0; i < rep.queries.size(); ++i) {
        const QueryRecord& r = rep.queries[i];
        J q;
        q["query"] = i;
        q["s"] = g.labels[r.s];
        q["t"] = g.labels[r.t];
        q["local"] = route_json(r.local, g.labels, rep.config.threshold,
                                rep.config.measure);
        q["global"] = route_json(r.global, g.labels, rep.config.threshold,
                                 rep.config.measure);
        q["local_index"] = r.local.found() ? J(r.local_index.str()) : J(nullptr);
        q["global_index"] = r.global.found() ? J(r.global_index.str()) : J(nullptr);
        q["local_hits_cover"] = r.local_hits_cover;
        q["global_hits_cover"] = r.global_hits_cover;
        qs.push_back(std::move(q));
    }
    return j.dump(2) + "\n";
}

std::string comparison_to_csv(const ComparisonReport& rep, const LoadedGraph& g) {
    std::string out =
        "query,s,t,local_status,local_hops,local_weight,local_index,local_hits_cover,"
        "global_status,global_hops,global_weight,global_index,rho0\n";
    for (size_t i = 0; i < rep.queries.size(); ++i) {
        const QueryRecord& r = rep.queries[i];
        out += std::to_string(i) + ',' + g.labels[r.s] + ',' + g.labels[r.t] + ',';
        if (r.local.found())
            out += "found," + std::to_string(r.local_hops) + ',' +
                   format_double(r.local.path.weight) + ',' + r.local_index.str() + ',';
        else
            out += "no_path,,,,";
        out += r.local_hits_cover ? "1," : "0,";
        if (r.global.found())
            out += "found," + std::to_string(r.global_hops) + ',' +
                   format_double(r.global.path.weight) + ',' + r.global_index.str() + ',';
        else
            out += "no_path,,,,";
        out += rep.config.rho0.str() + "\n";
    }
    return out;
}

}  // namespace caproute
