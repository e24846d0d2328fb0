#include "caproute/sim.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "caproute/dense.hpp"
#include "caproute/errors.hpp"

namespace caproute {

namespace {

const char* topology_name(Topology t) {
    switch (t) {
        case Topology::RandomUniform: return "random-uniform";
        case Topology::PreferentialAttachment: return "preferential-attachment";
        case Topology::Grid: return "grid";
        case Topology::Barbell: return "barbell";
    }
    return "?";
}

Topology topology_from(const std::string& s) {
    if (s == "random-uniform") return Topology::RandomUniform;
    if (s == "preferential-attachment") return Topology::PreferentialAttachment;
    if (s == "grid") return Topology::Grid;
    if (s == "barbell") return Topology::Barbell;
    throw InvalidParameterError("unknown topology '" + s + "'");
}

const char* load_model_name(LoadModel m) {
    return m == LoadModel::UniformRange ? "uniform" : "hotspot";
}

LoadModel load_model_from(const std::string& s) {
    if (s == "uniform") return LoadModel::UniformRange;
    if (s == "hotspot") return LoadModel::Hotspot;
    throw InvalidParameterError("unknown load model '" + s + "'");
}

void validate(const ScenarioConfig& cfg) {
    if (cfg.nodes < 2) throw InvalidParameterError("need at least 2 nodes");
    if (cfg.queries < 0) throw InvalidParameterError("negative query count");
    if (cfg.threshold < 0) throw InvalidParameterError("negative threshold");
    if (cfg.low_min < 0 || cfg.low_max < cfg.low_min || cfg.high_max < cfg.high_min)
        throw InvalidParameterError("load bands must satisfy 0 <= lo <= hi");
    if (cfg.load_model == LoadModel::Hotspot &&
        !(cfg.low_max <= cfg.threshold && cfg.threshold < cfg.high_min))
        throw InvalidParameterError(
            "hotspot needs low_max <= threshold < high_min so the hot region is "
            "exactly the congested part");
    switch (cfg.topology) {
        case Topology::RandomUniform:
            if (cfg.edge_param <= 0 || cfg.edge_param > 1)
                throw InvalidParameterError("edge probability must be in (0, 1]");
            break;
        case Topology::PreferentialAttachment:
            if (cfg.edge_param < 1)
                throw InvalidParameterError("attachment count must be >= 1");
            break;
        case Topology::Grid:
            break;
        case Topology::Barbell: {
            int b = static_cast<int>(cfg.edge_param);
            if (b < 3) throw InvalidParameterError("barbell block size must be >= 3");
            if (cfg.nodes < 2 * b + 1)
                throw InvalidParameterError("barbell needs nodes >= 2*block + 1");
            break;
        }
    }
    parse_measure(cfg.measure);
}

// Topology construction: plain edges on nodes [0, n). The hotspot region is
// returned for topologies with a designated block; empty means "use the top
// core of the built graph".
std::vector<Edge> build_topology(const ScenarioConfig& cfg, Rng& rng, NodeSet& region) {
    const int n = cfg.nodes;
    std::vector<Edge> edges;
    switch (cfg.topology) {
        case Topology::RandomUniform: {
            for (NodeId u = 0; u < n; ++u)
                for (NodeId v = u + 1; v < n; ++v)
                    if (rng.next01() < cfg.edge_param) edges.push_back({u, v});
            break;
        }
        case Topology::PreferentialAttachment: {
            int attach = std::max(1, static_cast<int>(cfg.edge_param));
            int seed_size = std::min(n, attach + 1);
            for (NodeId u = 0; u < seed_size; ++u)
                for (NodeId v = u + 1; v < seed_size; ++v) edges.push_back({u, v});
            std::vector<int> deg(n, 0);
            for (const Edge& e : edges) {
                ++deg[e.u];
                ++deg[e.v];
            }
            for (NodeId v = seed_size; v < n; ++v) {
                NodeSet chosen;
                int want = std::min(attach, v);
                while (static_cast<int>(chosen.size()) < want) {
                    // Sample an endpoint of a uniformly random half-edge
                    // (degree-proportional), falling back to uniform when the
                    // prefix graph is edgeless.
                    long long total = 0;
                    for (NodeId u = 0; u < v; ++u) total += deg[u] + 1;
                    long long pick =
                        static_cast<long long>(rng.next_u64() % static_cast<std::uint64_t>(total));
                    NodeId u = 0;
                    for (; u < v; ++u) {
                        pick -= deg[u] + 1;
                        if (pick < 0) break;
                    }
                    if (!set_contains(chosen, u)) {
                        chosen.push_back(u);
                        chosen = normalize_node_set(std::move(chosen));
                    }
                }
                for (NodeId u : chosen) {
                    edges.push_back({std::min(u, v), std::max(u, v)});
                    ++deg[u];
                    ++deg[v];
                }
            }
            break;
        }
        case Topology::Grid: {
            int rows = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n))));
            int cols = (n + rows - 1) / rows;
            auto id = [cols](int r, int c) { return r * cols + c; };
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) {
                    int v = id(r, c);
                    if (v >= n) continue;
                    if (c + 1 < cols && id(r, c + 1) < n) edges.push_back({v, id(r, c + 1)});
                    if (r + 1 < rows && id(r + 1, c) < n) edges.push_back({v, id(r + 1, c)});
                }
            break;
        }
        case Topology::Barbell: {
            int b = static_cast<int>(cfg.edge_param);
            for (NodeId u = 0; u < b; ++u)
                for (NodeId v = u + 1; v < b; ++v) edges.push_back({u, v});
            for (NodeId u = b; u < 2 * b; ++u)
                for (NodeId v = u + 1; v < 2 * b; ++v) edges.push_back({u, v});
            // Direct bridge between the blocks plus a detour path over the
            // remaining nodes.
            edges.push_back({b - 1, b});
            NodeId prev = 0;
            for (NodeId d = 2 * b; d < n; ++d) {
                edges.push_back({std::min(prev, d), std::max(prev, d)});
                prev = d;
            }
            edges.push_back({std::min(prev, static_cast<NodeId>(2 * b - 1)),
                             std::max(prev, static_cast<NodeId>(2 * b - 1))});
            for (NodeId v = 0; v < b; ++v) region.push_back(v);
            break;
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

LoadedGraph generate_scenario(const ScenarioConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    NodeSet region;
    std::vector<Edge> edges = build_topology(cfg, rng, region);

    Graph topo(cfg.nodes, edges);
    if (cfg.load_model == LoadModel::Hotspot && region.empty()) {
        if (topo.edge_count() == 0)
            throw InvalidParameterError("hotspot needs a graph with edges");
        NodeSet top = k_core(topo, degeneracy(topo));
        InducedSubgraph sub = induced(topo, top);
        auto comps = connected_components(sub.graph);
        for (NodeId v : comps.front()) region.push_back(sub.nodes[v]);
        region = normalize_node_set(std::move(region));
    }

    std::vector<LabeledEdge> labeled;
    labeled.reserve(topo.edge_count());
    for (const Edge& e : topo.edges()) {
        bool hot = cfg.load_model == LoadModel::Hotspot && set_contains(region, e.u) &&
                   set_contains(region, e.v);
        double load = hot ? rng.uniform(cfg.high_min, cfg.high_max)
                          : rng.uniform(cfg.low_min, cfg.low_max);
        labeled.push_back({std::to_string(e.u), std::to_string(e.v), load});
    }
    std::vector<std::string> isolated;
    std::vector<char> touched(cfg.nodes, 0);
    for (const Edge& e : topo.edges()) touched[e.u] = touched[e.v] = 1;
    for (NodeId v = 0; v < cfg.nodes; ++v)
        if (!touched[v]) isolated.push_back(std::to_string(v));
    return make_loaded_graph(labeled, isolated);
}

ComparisonReport compare_policies(const LoadedGraph& g, const ScenarioConfig& cfg) {
    validate(cfg);
    MeasurePtr m = parse_measure(cfg.measure);
    const int n = g.graph.node_count();
    if (n < 2) throw InvalidParameterError("need at least 2 nodes");

    ComparisonReport rep;
    rep.config = cfg;

    CongestedCore cc = congested_core(g, cfg.threshold);
    DenseCover cover = dense_cover(cc.core, *m, cfg.rho0);
    rep.cover = cc.to_original(cover.cover);
    rep.cover_exact = cover.exactness == Exactness::Exact;

    Rng rng(cfg.seed ^ 0x5DEECE66DULL);
    std::vector<double> local_w = edge_weights(g, WeightPolicy::Load);

    int local_hits = 0, global_no_path = 0, both_found = 0;
    double stretch_sum = 0.0;
    for (int qi = 0; qi < cfg.queries; ++qi) {
        QueryRecord rec;
        rec.s = rng.uniform_int(0, n - 1);
        do {
            rec.t = rng.uniform_int(0, n - 1);
        } while (rec.t == rec.s);

        rec.local = dijkstra(g.graph, local_w, rec.s, rec.t);
        rec.local.policy = WeightPolicy::Load;
        rec.global =
            route_with_density_index(g, cfg.threshold, *m, cfg.rho0, rec.s, rec.t);

        if (rec.local.found()) {
            rec.local_hops = static_cast<int>(rec.local.path.nodes.size()) - 1;
            rec.local_index =
                density_index(g, cfg.threshold, *m, rec.local.path.nodes).value;
            rec.local_hits_cover =
                !set_intersection(normalize_node_set(rec.local.path.nodes), rep.cover)
                     .empty();
            if (rec.local_hits_cover) ++local_hits;
        }
        if (rec.global.found()) {
            rec.global_hops = static_cast<int>(rec.global.path.nodes.size()) - 1;
            rec.global_index =
                density_index(g, cfg.threshold, *m, rec.global.path.nodes).value;
            rec.global_hits_cover =
                !set_intersection(normalize_node_set(rec.global.path.nodes), rep.cover)
                     .empty();
        } else {
            ++global_no_path;
        }
        if (rec.local.found() && rec.global.found() && rec.local_hops > 0) {
            stretch_sum += static_cast<double>(rec.global_hops) / rec.local_hops;
            ++both_found;
        }
        rep.queries.push_back(std::move(rec));
    }

    const int q = std::max(1, cfg.queries);
    rep.frac_local_hit_cover = static_cast<double>(local_hits) / q;
    rep.frac_global_no_path = static_cast<double>(global_no_path) / q;
    rep.mean_hop_stretch = both_found ? stretch_sum / both_found : 0.0;
    return rep;
}

ScenarioConfig parse_scenario_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid scenario JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scenario config must be a JSON object");

    ScenarioConfig cfg;
    auto num = [&](const char* key, double dflt) {
        return j.contains(key) ? j.at(key).get<double>() : dflt;
    };
    if (j.contains("topology")) cfg.topology = topology_from(j.at("topology"));
    cfg.nodes = static_cast<int>(num("nodes", cfg.nodes));
    cfg.edge_param = num("edge_param", cfg.edge_param);
    if (j.contains("load_model")) cfg.load_model = load_model_from(j.at("load_model"));
    cfg.low_min = num("low_min", cfg.low_min);
    cfg.low_max = num("low_max", cfg.low_max);
    cfg.high_min = num("high_min", cfg.high_min);
    cfg.high_max = num("high_max", cfg.high_max);
    cfg.threshold = num("threshold", cfg.threshold);
    if (j.contains("measure")) cfg.measure = j.at("measure").get<std::string>();
    if (j.contains("rho0")) {
        const auto& r = j.at("rho0");
        cfg.rho0 = parse_rational(r.is_string() ? r.get<std::string>() : r.dump());
    }
    cfg.queries = static_cast<int>(num("queries", cfg.queries));
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    validate(cfg);
    return cfg;
}

std::string scenario_config_to_json(const ScenarioConfig& cfg) {
    nlohmann::ordered_json j;
    j["topology"] = topology_name(cfg.topology);
    j["nodes"] = cfg.nodes;
    j["edge_param"] = cfg.edge_param;
    j["load_model"] = load_model_name(cfg.load_model);
    j["low_min"] = cfg.low_min;
    j["low_max"] = cfg.low_max;
    j["high_min"] = cfg.high_min;
    j["high_max"] = cfg.high_max;
    j["threshold"] = cfg.threshold;
    j["measure"] = cfg.measure;
    j["rho0"] = cfg.rho0.str();
    j["queries"] = cfg.queries;
    j["seed"] = cfg.seed;
    return j.dump(2) + "\n";
}

}  // namespace caproute
