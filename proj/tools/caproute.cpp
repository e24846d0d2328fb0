// Command-line surface: every library operation behind one binary.
// Exit codes: 0 result produced, 1 no-path or empty result, 2 usage error,
// 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "caproute/dense.hpp"
#include "caproute/density.hpp"
#include "caproute/errors.hpp"
#include "caproute/io.hpp"
#include "caproute/json_out.hpp"
#include "caproute/loaded_graph.hpp"
#include "caproute/measure.hpp"
#include "caproute/oracle.hpp"
#include "caproute/rational.hpp"
#include "caproute/routing.hpp"
#include "caproute/sim.hpp"

namespace {

using namespace caproute;

// Thrown for malformed flag VALUES (measure strings, rationals, paths):
// usage problems, distinct from unreadable input graphs.
struct UsageExit {
    std::string msg;
};

MeasurePtr measure_arg(const std::string& text) {
    try {
        return parse_measure(text);
    } catch (const Error& e) {
        throw UsageExit{std::string("bad --measure: ") + e.what()};
    }
}

Rational rational_arg(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw UsageExit{std::string("bad ") + flag + ": " + e.what()};
    }
}

GraphFormat format_arg(const std::string& text) {
    if (text == "auto") return GraphFormat::Auto;
    if (text == "edge-list") return GraphFormat::EdgeList;
    if (text == "json") return GraphFormat::Json;
    throw UsageExit{"bad --format: expected auto, edge-list, or json"};
}

LoadedGraph load_input(const std::string& path, const std::string& format) {
    GraphFormat fmt = format_arg(format);
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        text = read_file(path);
    }
    return parse_graph(text, fmt);
}

std::vector<NodeId> path_arg(const LoadedGraph& g, const std::string& text) {
    std::vector<NodeId> nodes;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string label =
            text.substr(pos, comma == std::string::npos ? text.size() - pos : comma - pos);
        if (label.empty()) throw UsageExit{"bad --path: empty label in list"};
        nodes.push_back(g.id_of(label));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return nodes;
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "auto";
    std::string output = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "graph file, or - for stdin")
        ->capture_default_str();
    cmd->add_option("--format", o.format, "auto | edge-list | json")
        ->capture_default_str();
    cmd->add_option("--output", o.output, "json | dot")->capture_default_str();
}

int emit(const std::string& text, bool empty_result) {
    std::cout << text;
    return empty_result ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"congestion-avoiding routing over dense-subgraph covers"};
    app.require_subcommand(1);

    CommonOpts core_o;
    double core_threshold = 0.0;
    CLI::App* cmd_core = app.add_subcommand("core", "congested core at a load threshold");
    add_common(cmd_core, core_o);
    cmd_core->add_option("--threshold", core_threshold, "congestion threshold")->required();

    CommonOpts kcore_o;
    double kcore_threshold = 0.0;
    int kcore_k = -1;
    CLI::App* cmd_kcore =
        app.add_subcommand("kcore", "core decomposition, or one k-core with --k");
    add_common(cmd_kcore, kcore_o);
    cmd_kcore->add_option("--k", kcore_k, "emit the k-core instead of all core numbers");
    CLI::Option* kcore_thr =
        cmd_kcore->add_option("--threshold", kcore_threshold,
                              "operate on the congested core instead of the whole graph");

    CommonOpts cover_o;
    std::string cover_measure;
    std::string cover_rho0;
    double cover_threshold = 0.0;
    CLI::App* cmd_cover = app.add_subcommand("cover", "dense cover at (measure, rho0)");
    add_common(cmd_cover, cover_o);
    cmd_cover->add_option("--measure", cover_measure, "measure expression")->required();
    cmd_cover->add_option("--rho0", cover_rho0, "density threshold (rational)")->required();
    CLI::Option* cover_thr =
        cmd_cover->add_option("--threshold", cover_threshold,
                              "operate on the congested core instead of the whole graph");

    CommonOpts densest_o;
    double densest_threshold = 0.0;
    CLI::App* cmd_densest =
        app.add_subcommand("densest", "maximal densest subgraph by edge density");
    add_common(cmd_densest, densest_o);
    CLI::Option* densest_thr =
        cmd_densest->add_option("--threshold", densest_threshold,
                                "operate on the congested core instead of the whole graph");

    CommonOpts route_o;
    double route_threshold = 0.0;
    std::string route_measure, route_rho0, route_from, route_to, route_weights = "unit";
    CLI::App* cmd_route =
        app.add_subcommand("route", "s-t path avoiding the dense cover at rho0");
    add_common(cmd_route, route_o);
    cmd_route->add_option("--threshold", route_threshold)->required();
    cmd_route->add_option("--measure", route_measure)->required();
    cmd_route->add_option("--rho0", route_rho0)->required();
    cmd_route->add_option("--from", route_from)->required();
    cmd_route->add_option("--to", route_to)->required();
    cmd_route->add_option("--weights", route_weights, "unit | load")->capture_default_str();

    CommonOpts cap_o;
    double cap_threshold = 0.0;
    std::string cap_measure, cap_from, cap_to, cap_weights = "unit";
    CLI::App* cmd_cap =
        app.add_subcommand("cap", "s-t path avoiding the maximally dense regions");
    add_common(cmd_cap, cap_o);
    cmd_cap->add_option("--threshold", cap_threshold)->required();
    cmd_cap->add_option("--measure", cap_measure)->required();
    cmd_cap->add_option("--from", cap_from)->required();
    cmd_cap->add_option("--to", cap_to)->required();
    cmd_cap->add_option("--weights", cap_weights, "unit | load")->capture_default_str();

    CommonOpts index_o;
    double index_threshold = 0.0;
    std::string index_measure, index_path;
    CLI::App* cmd_index = app.add_subcommand("index", "density index of a given path");
    add_common(cmd_index, index_o);
    cmd_index->add_option("--threshold", index_threshold)->required();
    cmd_index->add_option("--measure", index_measure)->required();
    cmd_index->add_option("--path", index_path, "comma-separated node labels")->required();

    std::string sim_config, sim_output = "json", sim_dump_graph;
    std::string sim_topology = "random-uniform", sim_load_model = "hotspot";
    std::string sim_measure = "mindeg", sim_rho0 = "2";
    int sim_nodes = 16, sim_queries = 20;
    double sim_edge_param = 0.3, sim_threshold = 0.7;
    double sim_low_min = 0.05, sim_low_max = 0.5, sim_high_min = 0.8, sim_high_max = 0.95;
    std::uint64_t sim_seed = 1;
    CLI::App* cmd_sim =
        app.add_subcommand("simulate", "generate a scenario and compare local vs "
                                       "global routing policies");
    cmd_sim->add_option("--config", sim_config, "scenario config JSON file");
    cmd_sim->add_option("--output", sim_output, "json | csv")->capture_default_str();
    cmd_sim->add_option("--dump-graph", sim_dump_graph,
                        "also write the generated graph JSON to this file");
    CLI::Option* o_topology = cmd_sim->add_option("--topology", sim_topology,
                                                  "random-uniform | "
                                                  "preferential-attachment | grid | "
                                                  "barbell");
    CLI::Option* o_nodes = cmd_sim->add_option("--nodes", sim_nodes);
    CLI::Option* o_edge_param = cmd_sim->add_option("--edge-param", sim_edge_param);
    CLI::Option* o_load_model =
        cmd_sim->add_option("--load-model", sim_load_model, "uniform | hotspot");
    CLI::Option* o_low_min = cmd_sim->add_option("--low-min", sim_low_min);
    CLI::Option* o_low_max = cmd_sim->add_option("--low-max", sim_low_max);
    CLI::Option* o_high_min = cmd_sim->add_option("--high-min", sim_high_min);
    CLI::Option* o_high_max = cmd_sim->add_option("--high-max", sim_high_max);
    CLI::Option* o_threshold = cmd_sim->add_option("--threshold", sim_threshold);
    CLI::Option* o_measure = cmd_sim->add_option("--measure", sim_measure);
    CLI::Option* o_rho0 = cmd_sim->add_option("--rho0", sim_rho0);
    CLI::Option* o_queries = cmd_sim->add_option("--queries", sim_queries);
    CLI::Option* o_seed = cmd_sim->add_option("--seed", sim_seed);

    CommonOpts oracle_o;
    std::string oracle_measure, oracle_rho0;
    double oracle_threshold = 0.0;
    CLI::App* cmd_oracle = app.add_subcommand(
        "oracle-check", "exhaustively enumerate qualifying subgraphs and compare "
                        "against the fast cover (small graphs only)");
    add_common(cmd_oracle, oracle_o);
    cmd_oracle->add_option("--measure", oracle_measure)->required();
    cmd_oracle->add_option("--rho0", oracle_rho0)->required();
    CLI::Option* oracle_thr =
        cmd_oracle->add_option("--threshold", oracle_threshold,
                               "check the cover of the congested core");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_core)) {
            LoadedGraph g = load_input(core_o.input, core_o.format);
            CongestedCore cc = congested_core(g, core_threshold);
            if (core_o.output == "dot")
                return emit(to_dot(g, {.congested_edges = cc.edge_origin}), cc.empty());
            return emit(congested_core_to_json(g, cc), cc.empty());
        }

        if (app.got_subcommand(cmd_kcore)) {
            LoadedGraph g = load_input(kcore_o.input, kcore_o.format);
            Graph target = g.graph;
            Labels labels = g.labels;
            if (*kcore_thr) {
                CongestedCore cc = congested_core(g, kcore_threshold);
                target = cc.core;
                labels.clear();
                for (NodeId v : cc.origin) labels.push_back(g.labels[v]);
            }
            if (kcore_k < 0)
                return emit(core_numbers_to_json(core_decomposition(target), labels),
                            target.node_count() == 0);
            NodeSet core = k_core(target, kcore_k);
            return emit(node_set_to_json("k_core", core, labels), core.empty());
        }

        if (app.got_subcommand(cmd_cover)) {
            MeasurePtr m = measure_arg(cover_measure);
            Rational rho0 = rational_arg(cover_rho0, "--rho0");
            LoadedGraph g = load_input(cover_o.input, cover_o.format);
            CongestedCore cc = congested_core(g, *cover_thr ? cover_threshold : -1.0);
            // Without --threshold every edge passes the -1 threshold, so the
            // core is the whole graph minus isolated nodes; with an explicit
            // threshold it is the congested core.
            DenseCover cover = dense_cover(cc.core, *m, rho0);
            Labels labels;
            for (NodeId v : cc.origin) labels.push_back(g.labels[v]);
            if (cover_o.output == "dot") {
                DotStyle style;
                if (*cover_thr) style.congested_edges = cc.edge_origin;
                style.filled_nodes = cc.to_original(cover.cover);
                return emit(to_dot(g, style), cover.cover.empty());
            }
            return emit(cover_to_json(cover, labels), cover.cover.empty());
        }

        if (app.got_subcommand(cmd_densest)) {
            LoadedGraph g = load_input(densest_o.input, densest_o.format);
            CongestedCore cc = congested_core(g, *densest_thr ? densest_threshold : -1.0);
            DensestResult r = densest_subgraph(cc.core);
            Labels labels;
            for (NodeId v : cc.origin) labels.push_back(g.labels[v]);
            return emit(densest_to_json(r, labels), r.nodes.empty());
        }

        if (app.got_subcommand(cmd_route) || app.got_subcommand(cmd_cap)) {
            bool is_route = app.got_subcommand(cmd_route);
            const CommonOpts& o = is_route ? route_o : cap_o;
            MeasurePtr m = measure_arg(is_route ? route_measure : cap_measure);
            const std::string& wp_text = is_route ? route_weights : cap_weights;
            if (wp_text != "unit" && wp_text != "load")
                throw UsageExit{"bad --weights: expected unit or load"};
            WeightPolicy wp = wp_text == "load" ? WeightPolicy::Load : WeightPolicy::Unit;
            double threshold = is_route ? route_threshold : cap_threshold;

            LoadedGraph g = load_input(o.input, o.format);
            NodeId s = g.id_of(is_route ? route_from : cap_from);
            NodeId t = g.id_of(is_route ? route_to : cap_to);
            RouteOutcome r =
                is_route ? route_with_density_index(
                               g, threshold, *m, rational_arg(route_rho0, "--rho0"), s, t, wp)
                         : cap_route(g, threshold, *m, s, t, wp);
            if (o.output == "dot") {
                DotStyle style;
                style.congested_edges = congested_core(g, threshold).edge_origin;
                style.filled_nodes = r.cover;
                if (r.found()) style.path = r.path.nodes;
                std::cout << to_dot(g, style);
                return r.found() ? 0 : 1;
            }
            std::cout << route_to_json(r, g.labels, threshold, measure_to_string(*m));
            return r.found() ? 0 : 1;
        }

        if (app.got_subcommand(cmd_index)) {
            MeasurePtr m = measure_arg(index_measure);
            LoadedGraph g = load_input(index_o.input, index_o.format);
            DensityIndexResult r =
                density_index(g, index_threshold, *m, path_arg(g, index_path));
            return emit(density_index_to_json(r, index_threshold, measure_to_string(*m)),
                        false);
        }

        if (app.got_subcommand(cmd_sim)) {
            ScenarioConfig cfg;
            if (!sim_config.empty()) cfg = parse_scenario_config(read_file(sim_config));
            auto maybe = [](CLI::Option* o) { return o->count() > 0; };
            if (maybe(o_topology) || sim_config.empty()) {
                if (sim_topology == "random-uniform")
                    cfg.topology = Topology::RandomUniform;
                else if (sim_topology == "preferential-attachment")
                    cfg.topology = Topology::PreferentialAttachment;
                else if (sim_topology == "grid")
                    cfg.topology = Topology::Grid;
                else if (sim_topology == "barbell")
                    cfg.topology = Topology::Barbell;
                else
                    throw UsageExit{"bad --topology"};
            }
            if (maybe(o_load_model) || sim_config.empty()) {
                if (sim_load_model == "uniform")
                    cfg.load_model = LoadModel::UniformRange;
                else if (sim_load_model == "hotspot")
                    cfg.load_model = LoadModel::Hotspot;
                else
                    throw UsageExit{"bad --load-model"};
            }
            if (maybe(o_nodes)) cfg.nodes = sim_nodes;
            if (maybe(o_edge_param)) cfg.edge_param = sim_edge_param;
            if (maybe(o_low_min)) cfg.low_min = sim_low_min;
            if (maybe(o_low_max)) cfg.low_max = sim_low_max;
            if (maybe(o_high_min)) cfg.high_min = sim_high_min;
            if (maybe(o_high_max)) cfg.high_max = sim_high_max;
            if (maybe(o_threshold)) cfg.threshold = sim_threshold;
            if (maybe(o_measure)) cfg.measure = sim_measure;
            if (maybe(o_rho0)) cfg.rho0 = rational_arg(sim_rho0, "--rho0");
            if (maybe(o_queries)) cfg.queries = sim_queries;
            if (maybe(o_seed)) cfg.seed = sim_seed;
            measure_arg(cfg.measure);
            LoadedGraph g = generate_scenario(cfg);
            if (!sim_dump_graph.empty()) {
                std::ofstream f(sim_dump_graph, std::ios::binary);
                if (!f) throw Error("cannot write '" + sim_dump_graph + "'");
                f << serialize_json_graph(g);
            }
            ComparisonReport rep = compare_policies(g, cfg);
            if (sim_output == "csv") return emit(comparison_to_csv(rep, g), false);
            if (sim_output != "json") throw UsageExit{"bad --output: expected json or csv"};
            return emit(comparison_to_json(rep, g), false);
        }

        if (app.got_subcommand(cmd_oracle)) {
            MeasurePtr m = measure_arg(oracle_measure);
            Rational rho0 = rational_arg(oracle_rho0, "--rho0");
            LoadedGraph g = load_input(oracle_o.input, oracle_o.format);
            CongestedCore cc = congested_core(g, *oracle_thr ? oracle_threshold : -1.0);
            Labels labels;
            for (NodeId v : cc.origin) labels.push_back(g.labels[v]);

            OracleReport rep;
            bool comparable = true;
            try {
                DenseCover cover = dense_cover(cc.core, *m, rho0);
                rep = check_cover(cc.core, *m, rho0, cover.cover);
                if (cover.exactness == Exactness::Exact && !rep.complete) comparable = false;
            } catch (const UnsupportedMeasureError&) {
                rep = enumerate_dense(cc.core, *m, rho0);
            }
            std::cout << oracle_report_to_json(rep, labels);
            return (rep.sound && comparable) ? 0 : 1;
        }

        return 2;
    } catch (const UsageExit& e) {
        std::cerr << e.msg << "\n";
        return 2;
    } catch (const UnsupportedMeasureError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
