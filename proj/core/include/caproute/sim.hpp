#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "caproute/loaded_graph.hpp"
#include "caproute/measure.hpp"
#include "caproute/rational.hpp"
#include "caproute/routing.hpp"

namespace caproute {

// mt19937_64 is bit-exact across platforms; the helpers below avoid
// std::uniform_*_distribution, whose outputs are implementation-defined.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t next_u64() { return gen(); }
    // Uniform in [0, 1), 53 mantissa bits.
    double next01() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }
    // Inclusive bounds; modulo bias is irrelevant at these range sizes.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

enum class Topology { RandomUniform, PreferentialAttachment, Grid, Barbell };
enum class LoadModel { UniformRange, Hotspot };

// edge_param meaning by topology: RandomUniform = edge probability;
// PreferentialAttachment = edges added per new node; Grid = ignored;
// Barbell = clique block size (two blocks + a detour path on the rest).
struct ScenarioConfig {
    Topology topology = Topology::RandomUniform;
    int nodes = 16;
    double edge_param = 0.3;
    LoadModel load_model = LoadModel::Hotspot;
    double low_min = 0.05;  // low band; UniformRange draws all loads here
    double low_max = 0.5;
    double high_min = 0.8;  // hotspot band, must sit strictly above threshold
    double high_max = 0.95;
    double threshold = 0.7;
    std::string measure = "mindeg";
    Rational rho0 = Rational(2);
    int queries = 20;
    std::uint64_t seed = 1;
};

ScenarioConfig parse_scenario_config(const std::string& json_text);
std::string scenario_config_to_json(const ScenarioConfig& cfg);

// Deterministic in cfg.seed. Under Hotspot the region is the first component
// of the topology's top core (Barbell: the first clique block); its internal
// edges draw from the high band, everything else from the low band, so the
// congested core at cfg.threshold is exactly that region.
LoadedGraph generate_scenario(const ScenarioConfig& cfg);

struct QueryRecord {
    NodeId s = -1;
    NodeId t = -1;
    RouteOutcome local;        // load-weighted shortest path, congestion-blind
    RouteOutcome global;       // cover-avoiding route at (measure, rho0)
    Rational local_index;      // density_index of each found path
    Rational global_index;
    bool local_hits_cover = false;
    bool global_hits_cover = false;  // must stay false; re-checked post hoc
    int local_hops = -1;
    int global_hops = -1;
};

struct ComparisonReport {
    ScenarioConfig config;
    NodeSet cover;  // removed node set used by the global policy
    bool cover_exact = true;
    std::vector<QueryRecord> queries;
    double frac_local_hit_cover = 0.0;
    double mean_hop_stretch = 0.0;  // mean of global/local hops where both found
    double frac_global_no_path = 0.0;
};

// Runs cfg.queries sampled (s, t) pairs under both policies and aggregates.
ComparisonReport compare_policies(const LoadedGraph& g, const ScenarioConfig& cfg);

}  // namespace caproute
