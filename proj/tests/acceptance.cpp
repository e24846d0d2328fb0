// Acceptance gate: ten independently runnable checks, one PASS/FAIL line
// each. Every check pits the fast implementations against exhaustive
// recomputation on seeded instances; any violation fails the run.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "caproute/dense.hpp"
#include "caproute/density.hpp"
#include "caproute/errors.hpp"
#include "caproute/io.hpp"
#include "caproute/measure.hpp"
#include "caproute/mincut.hpp"
#include "caproute/oracle.hpp"
#include "caproute/routing.hpp"
#include "caproute/sim.hpp"
#include "cli_runner.hpp"
#include "golden_cases.hpp"
#include "helpers.hpp"

using namespace caproute;
using testutil::mask_nodes;
using testutil::TRng;

namespace {

struct Outcome {
    bool pass = true;
    long long checks = 0;
    long long violations = 0;
    std::string note;

    void violation() {
        ++violations;
        pass = false;
    }
};

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

// ---- criterion 1: dense_cover vs exhaustive union, MinDegree + EdgeConnectivity

Outcome criterion_covers() {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    MeasurePtr measures[] = {parse_measure("mindeg"), parse_measure("conn")};
    const double probs[] = {0.2, 0.4, 0.6};
    int graphs = 0;
    for (int rep = 0; rep < 19 && graphs < 520; ++rep)
        for (int n = 4; n <= 12; ++n)
            for (double p : probs) {
                TRng rng(1000003ULL * rep + 97ULL * n + static_cast<int>(p * 10));
                Graph g = testutil::random_graph(rng, n, p);
                ++graphs;
                int hi = degeneracy(g) + 1;
                for (const MeasurePtr& m : measures) {
                    auto scored = enumerate_subgraph_values(g, *m);
                    for (int rho0 = 0; rho0 <= hi; ++rho0) {
                        NodeSet oracle_union;
                        if (rho0 == 0) {
                            oracle_union = g.all_nodes();
                        } else {
                            for (const ScoredSubgraph& s : scored)
                                if (Rational(rho0) <= s.value)
                                    oracle_union = set_union(oracle_union, s.nodes);
                        }
                        DenseCover cover = dense_cover(g, *m, Rational(rho0));
                        ++out.checks;
                        if (!set_difference(oracle_union, cover.cover).empty())
                            out.violation();
                        else if (cover.exactness == Exactness::Exact &&
                                 cover.cover != oracle_union)
                            out.violation();
                    }
                }
            }
    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (elapsed >= 300) out.pass = false;
    out.note = fmt("%d graphs, %lld cover comparisons, %llds elapsed (budget 300s)",
                   graphs, out.checks, static_cast<long long>(elapsed));
    return out;
}

// ---- criteria 2 and 3 share the routing instance stream

void routing_instances(
    const std::function<void(const LoadedGraph&, const MeasureExpr&, const Rational&,
                             NodeId, NodeId, const RouteOutcome&)>& visit) {
    const char* measures[] = {"mindeg", "conn", "max(mindeg,conn)", "min(mindeg,conn)"};
    int made = 0;
    for (int rep = 0; made < 216; ++rep) {
        TRng rng(777ULL + rep);
        int n = 4 + rep % 9;  // 4..12
        LoadedGraph g = testutil::random_loaded_graph(rng, n, 0.25 + 0.1 * (rep % 4));
        NodeId s = rng.uniform_int(0, n - 1);
        NodeId t = rng.uniform_int(0, n - 1);
        if (s == t) continue;
        MeasurePtr m = parse_measure(measures[rep % 4]);
        Rational rho0(rep % 5);
        RouteOutcome fast = route_with_density_index(g, 0.5, *m, rho0, s, t);
        visit(g, *m, rho0, s, t, fast);
        ++made;
    }
}

Outcome criterion_routing() {
    Outcome out;
    routing_instances([&](const LoadedGraph& g, const MeasureExpr& m, const Rational& rho0,
                          NodeId s, NodeId t, const RouteOutcome& fast) {
        RouteOutcome slow = brute_force_cap(g, 0.5, m, rho0, s, t);
        ++out.checks;
        bool ok = true;
        if (fast.certified && fast.found() != slow.found()) ok = false;
        if (fast.found()) {
            // A found path must dodge every qualifying subgraph, exact or not.
            CongestedCore cc = congested_core(g, 0.5);
            if (cc.core.node_count() > 0) {
                NodeSet forbidden = cc.to_original(
                    enumerate_dense(cc.core, m, rho0).exact_cover);
                if (!set_intersection(normalize_node_set(fast.path.nodes), forbidden)
                         .empty())
                    ok = false;
            }
            if (fast.certified && slow.found() &&
                !(fast.path.weight <= slow.path.weight + 1e-9 &&
                  slow.path.weight <= fast.path.weight + 1e-9))
                ok = false;
        }
        if (!ok) out.violation();
    });
    out.note = fmt("%lld routing instances vs exhaustive reference", out.checks);
    return out;
}

Outcome criterion_index_contract() {
    Outcome out;
    long long found = 0;
    routing_instances([&](const LoadedGraph& g, const MeasureExpr& m, const Rational& rho0,
                          NodeId, NodeId, const RouteOutcome& fast) {
        ++out.checks;
        if (!fast.found() || !fast.certified) return;
        ++found;
        DensityIndexResult idx = density_index(g, 0.5, m, fast.path.nodes);
        if (!(idx.value <= rho0)) out.violation();
    });
    out.note = fmt("%lld certified found paths out of %lld instances; index stayed at or"
                   " below the requested threshold",
                   found, out.checks);
    return out;
}

// ---- criterion 4: overlapping k-edge-connected subgraphs union to k-edge-connected

Outcome criterion_overlap_union() {
    Outcome out;
    int graphs = 0;
    long long pairs = 0;
    for (int rep = 0; graphs < 216; ++rep) {
        TRng rng(4242ULL + rep);
        int n = 5 + rep % 5;  // 5..9
        Graph g = testutil::random_graph(rng, n, 0.45 + 0.1 * (rep % 3));
        ++graphs;
        unsigned full = 1u << n;
        std::vector<int> lambda(full, 0);
        for (unsigned mask = 1; mask < full; ++mask)
            lambda[mask] =
                testutil::menger_edge_connectivity(induced_subgraph(g, mask_nodes(mask)));
        for (int k = 2; k <= 3; ++k) {
            std::vector<unsigned> qual;
            for (unsigned mask = 1; mask < full; ++mask)
                if (lambda[mask] >= k) qual.push_back(mask);
            for (size_t i = 0; i < qual.size(); ++i)
                for (size_t j = i + 1; j < qual.size(); ++j) {
                    if ((qual[i] & qual[j]) == 0) continue;
                    ++pairs;
                    ++out.checks;
                    if (lambda[qual[i] | qual[j]] < k) out.violation();
                }
        }
    }
    out.note = fmt("%d graphs, %lld overlapping pairs unioned and re-verified by"
                   " flow counting",
                   graphs, pairs);
    return out;
}

Outcome criterion_disjointness() {
    Outcome out;
    for (int rep = 0; rep < 260; ++rep) {
        TRng rng(515151ULL + rep);
        int n = 3 + rep % 10;  // 3..12
        Graph g = testutil::random_graph(rng, n, 0.3 + 0.1 * (rep % 4));
        for (int k = 1; k <= 4; ++k) {
            auto comps = maximal_k_edge_connected(g, k);
            ++out.checks;
            size_t total = 0;
            NodeSet seen;
            bool ok = true;
            for (const NodeSet& c : comps) {
                total += c.size();
                if (!set_intersection(seen, c).empty()) ok = false;
                seen = set_union(seen, c);
            }
            if (total > static_cast<size_t>(g.node_count())) ok = false;
            if (!ok) out.violation();
        }
    }
    out.note = fmt("%lld decompositions checked for pairwise disjointness and total"
                   " size at most |V|",
                   out.checks);
    return out;
}

Outcome criterion_hierarchy() {
    Outcome out;
    for (int rep = 0; rep < 150; ++rep) {
        TRng rng(90909ULL + rep);
        int n = 4 + rep % 12;  // 4..15
        Graph g = testutil::random_graph(rng, n, 0.35 + 0.1 * (rep % 4));
        int d = degeneracy(g);
        for (int k = 0; k <= d; ++k) {
            ++out.checks;
            NodeSet outer = k_core(g, k);
            NodeSet inner = k_core(g, k + 1);
            if (!set_difference(inner, outer).empty()) out.violation();
        }
        ++out.checks;
        if (brute_force_clique_number(g) - 1 > d) out.violation();
    }
    out.note = fmt("%lld nesting and clique-bound checks on graphs up to 15 nodes",
                   out.checks);
    return out;
}

// ---- criterion 7: monotone under edge addition, nonnegative

MeasurePtr random_tree(TRng& rng, int depth) {
    int roll = rng.uniform_int(0, depth <= 0 ? 4 : 6);
    switch (roll) {
        case 0: return make_leaf(MeasureKind::EdgeDensity);
        case 1: return make_leaf(MeasureKind::MinDegree);
        case 2: return make_leaf(MeasureKind::KCliqueDensity, rng.uniform_int(2, 6));
        case 3: return make_leaf(MeasureKind::SquaredDegree);
        case 4: return make_leaf(MeasureKind::EdgeConnectivity);
        default: {
            std::vector<MeasurePtr> children;
            int arity = rng.uniform_int(2, 3);
            for (int i = 0; i < arity; ++i) children.push_back(random_tree(rng, depth - 1));
            return roll == 5 ? make_min(children) : make_max(children);
        }
    }
}

Outcome criterion_measure_axioms() {
    Outcome out;
    std::vector<MeasurePtr> measures;
    for (const char* text : {"edge", "mindeg", "kclique:3", "sqdeg", "conn"})
        measures.push_back(parse_measure(text));
    TRng tree_rng(31337);
    for (int i = 0; i < 100; ++i) measures.push_back(random_tree(tree_rng, 3));

    int graphs_per_measure = 2;
    std::uint64_t seed = 1;
    for (const MeasurePtr& m : measures)
        for (int gi = 0; gi < graphs_per_measure; ++gi) {
            TRng rng(seed++);
            int n = 4 + rng.uniform_int(0, 5);
            Graph g = testutil::random_graph(rng, n, 0.45);
            for (int add = 0; add < 3; ++add) {
                std::vector<Edge> missing;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (!g.has_edge(u, v)) missing.push_back({u, v});
                if (missing.empty()) break;
                Edge e = missing[rng.uniform_int(0, static_cast<int>(missing.size()) - 1)];
                std::vector<Edge> es(g.edges().begin(), g.edges().end());
                es.push_back(e);
                Graph g2(n, std::move(es));
                Rational before = eval_measure(*m, g);
                Rational after = eval_measure(*m, g2);
                ++out.checks;
                if (before < Rational(0) || after < before) out.violation();
                g = std::move(g2);
            }
        }
    out.note = fmt("%lld single-edge additions across 5 leaves and 100 random"
                   " min/max trees of depth <= 3",
                   out.checks);
    return out;
}

Outcome criterion_combinators() {
    Outcome out;
    MeasurePtr mx = parse_measure("max(mindeg,conn)");
    MeasurePtr mn = parse_measure("min(mindeg,conn)");
    long long gap_total = 0, gap_max = 0, min_instances = 0, min_exact = 0;
    for (int rep = 0; rep < 70; ++rep) {
        TRng rng(606060ULL + rep);
        int n = 4 + rep % 6;  // 4..9
        Graph g = testutil::random_graph(rng, n, 0.5);
        for (int rho0 = 1; rho0 <= 3; ++rho0) {
            NodeSet oracle_max = enumerate_dense(g, *mx, Rational(rho0)).exact_cover;
            DenseCover cmax = dense_cover(g, *mx, Rational(rho0));
            ++out.checks;
            if (cmax.exactness != Exactness::Exact || cmax.cover != oracle_max)
                out.violation();

            NodeSet oracle_min = enumerate_dense(g, *mn, Rational(rho0)).exact_cover;
            DenseCover cmin = dense_cover(g, *mn, Rational(rho0));
            ++out.checks;
            if (!set_difference(oracle_min, cmin.cover).empty()) out.violation();
            long long gap =
                static_cast<long long>(cmin.cover.size()) -
                static_cast<long long>(oracle_min.size());
            gap_total += gap;
            gap_max = gap > gap_max ? gap : gap_max;
            ++min_instances;
            if (cmin.exactness == Exactness::Exact) ++min_exact;
        }
    }
    out.note = fmt("max-cover equality plus min-cover containment; min-cover gap: mean"
                   " %.3f nodes, max %lld, exact on %lld of %lld instances",
                   min_instances ? static_cast<double>(gap_total) / min_instances : 0.0,
                   gap_max, min_exact, min_instances);
    return out;
}

Outcome criterion_spot_checks() {
    Outcome out;
    auto expect = [&](bool cond) {
        ++out.checks;
        if (!cond) out.violation();
    };
    expect(edge_connectivity(testutil::complete_graph(6)) == Rational(5));
    expect(degeneracy(testutil::complete_graph(5)) == 4);
    expect(edge_density(testutil::complete_graph(4)) == Rational(3, 2));
    expect(squared_degree_density(testutil::complete_graph(3)) == Rational(4));
    expect(k_clique_density(testutil::complete_graph(4), 3) == Rational(1));
    out.note = "connectivity, degeneracy, and all density forms, exact rationals";
    return out;
}

Outcome criterion_determinism() {
    Outcome out;
    for (const auto& gc : testutil::golden_cases()) {
        ++out.checks;
        testutil::CliResult a = testutil::run_cli(gc.args);
        testutil::CliResult b = testutil::run_cli(gc.args);
        std::string expected;
        bool have_expected = true;
        try {
            expected = read_file(testutil::golden_path("expected/" + gc.name));
        } catch (const Error&) {
            have_expected = false;
        }
        if (a.exit_code != 0 || a.out != b.out || !have_expected || a.out != expected) {
            out.violation();
            out.note += (out.note.empty() ? "" : ", ") + gc.name;
        }
    }
    if (out.pass)
        out.note = fmt("%lld pinned CLI scenarios, each run twice, byte-identical and"
                       " equal to the stored output",
                       out.checks);
    else
        out.note = "mismatches: " + out.note;
    return out;
}

struct Criterion {
    int number;
    const char* title;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "dense covers match exhaustive subgraph enumeration", criterion_covers},
    {2, "routing agrees with the exhaustive reference router", criterion_routing},
    {3, "certified found paths keep density index at or below rho0",
     criterion_index_contract},
    {4, "overlapping k-edge-connected subgraphs union to k-edge-connected",
     criterion_overlap_union},
    {5, "maximal k-edge-connected components are disjoint and small in total",
     criterion_disjointness},
    {6, "k-core nesting holds and clique number minus one is at most degeneracy",
     criterion_hierarchy},
    {7, "all measures are nonnegative and monotone under edge addition",
     criterion_measure_axioms},
    {8, "max covers are exact unions; min covers contain the enumerated set",
     criterion_combinators},
    {9, "analytic spot checks hit exact rational values", criterion_spot_checks},
    {10, "repeated CLI invocations are byte-identical and match pinned outputs",
     criterion_determinism},
};

int run_one(const Criterion& c) {
    Outcome out = c.run();
    std::printf("%s  criterion %d: %s - %s", out.pass ? "PASS" : "FAIL", c.number,
                c.title, out.note.c_str());
    if (out.violations > 0)
        std::printf(" [%lld violation%s in %lld checks]", out.violations,
                    out.violations == 1 ? "" : "s", out.checks);
    std::printf("\n");
    std::fflush(stdout);
    return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [criterion 1-10]\n", argv[0]);
        return 2;
    }
    if (argc == 2) {
        int want = std::atoi(argv[1]);
        for (const Criterion& c : kCriteria)
            if (c.number == want) return run_one(c);
        std::fprintf(stderr, "no criterion %s\n", argv[1]);
        return 2;
    }
    int failures = 0;
    for (const Criterion& c : kCriteria) failures += run_one(c);
    if (failures) std::printf("%d of 10 criteria failed\n", failures);
    return failures ? 1 : 0;
}
