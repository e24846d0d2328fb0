#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "caproute/dense.hpp"
#include "caproute/errors.hpp"
#include "caproute/io.hpp"
#include "caproute/oracle.hpp"
#include "caproute/routing.hpp"
#include "helpers.hpp"

using namespace caproute;
using testutil::TRng;

namespace {

struct PathSearch {
    const Graph& g;
    const std::vector<double>& w;
    NodeId t;
    std::vector<NodeId> cur;
    std::vector<char> used;
    double cur_w = 0.0;
    bool found = false;
    double best_w = 0.0;
    std::vector<NodeId> best;

    void dfs(NodeId v) {
        if (v == t) {
            if (!found || cur_w < best_w - 1e-12 ||
                (std::abs(cur_w - best_w) <= 1e-12 && cur < best)) {
                found = true;
                best_w = cur_w;
                best = cur;
            }
            return;
        }
        for (NodeId x : g.neighbors(v)) {
            if (used[x]) continue;
            used[x] = 1;
            cur.push_back(x);
            cur_w += w[g.edge_id(v, x)];
            dfs(x);
            cur_w -= w[g.edge_id(v, x)];
            cur.pop_back();
            used[x] = 0;
        }
    }
};

// Minimum-weight s-t path, lexicographically smallest among (near-exact)
// ties, by full enumeration.
PathSearch brute_shortest(const Graph& g, const std::vector<double>& w, NodeId s,
                          NodeId t) {
    PathSearch ps{g, w, t, {s}, std::vector<char>(g.node_count(), 0)};
    ps.used[s] = 1;
    ps.dfs(s);
    return ps;
}

LoadedGraph pendant_core_instance() {
    // Congested part: K4 {a,b,c,d} plus pendant p hanging off d. Light part:
    // s and t reach both p and the clique node a, and each other.
    return parse_edge_list(
        "a b 0.9\na c 0.9\na d 0.9\nb c 0.9\nb d 0.9\nc d 0.9\n"
        "d p 0.9\n"
        "s p 0.1\np t 0.1\ns a 0.1\na t 0.1\ns t 0.1\n");
}

}  // namespace

TEST_CASE("dijkstra: hand instances and validation") {
    LoadedGraph g = parse_edge_list("a b 0.4\nb c 0.3\na c 0.9\n");
    auto w = edge_weights(g, WeightPolicy::Load);
    RouteOutcome r = dijkstra(g.graph, w, g.id_of("a"), g.id_of("c"));
    REQUIRE(r.found());
    CHECK(r.path.nodes == std::vector<NodeId>{g.id_of("a"), g.id_of("b"), g.id_of("c")});
    CHECK(r.path.weight == doctest::Approx(0.7));

    auto unit = edge_weights(g, WeightPolicy::Unit);
    RouteOutcome direct = dijkstra(g.graph, unit, g.id_of("a"), g.id_of("c"));
    REQUIRE(direct.found());
    CHECK(direct.path.nodes.size() == 2);
    CHECK(direct.path.weight == 1.0);

    CHECK_THROWS_AS(dijkstra(g.graph, unit, 0, 0), InvalidParameterError);
    CHECK_THROWS_AS(dijkstra(g.graph, unit, 0, 99), UnknownNodeError);
    CHECK_THROWS_AS(dijkstra(g.graph, {1.0}, 0, 1), InvalidParameterError);
}

TEST_CASE("dijkstra reports disconnected endpoints as no-path") {
    Graph g(4, {{0, 1}, {2, 3}});
    RouteOutcome r = dijkstra(g, std::vector<double>(2, 1.0), 0, 3);
    CHECK_FALSE(r.found());
    CHECK(r.reason == NoPathReason::Disconnected);
}

TEST_CASE("dijkstra matches brute-force optimum on random weighted graphs") {
    TRng rng(71);
    int tested = 0;
    while (tested < 60) {
        LoadedGraph g = testutil::random_loaded_graph(rng, rng.uniform_int(2, 8), 0.5);
        NodeId s = rng.uniform_int(0, g.graph.node_count() - 1);
        NodeId t = rng.uniform_int(0, g.graph.node_count() - 1);
        if (s == t) continue;
        auto w = edge_weights(g, WeightPolicy::Load);
        PathSearch ps = brute_shortest(g.graph, w, s, t);
        if (!ps.found) continue;
        RouteOutcome r = dijkstra(g.graph, w, s, t);
        REQUIRE(r.found());
        CHECK(r.path.weight == doctest::Approx(ps.best_w).epsilon(1e-9));
        ++tested;
    }
}

TEST_CASE("dijkstra picks the lexicographically smallest minimum-hop path") {
    TRng rng(73);
    int tested = 0;
    while (tested < 60) {
        Graph g = testutil::random_graph(rng, rng.uniform_int(2, 8), 0.5);
        NodeId s = rng.uniform_int(0, g.node_count() - 1);
        NodeId t = rng.uniform_int(0, g.node_count() - 1);
        if (s == t) continue;
        std::vector<double> w(g.edge_count(), 1.0);
        PathSearch ps = brute_shortest(g, w, s, t);
        if (!ps.found) continue;
        RouteOutcome r = dijkstra(g, w, s, t);
        REQUIRE(r.found());
        CHECK(r.path.nodes == ps.best);
        ++tested;
    }
}

TEST_CASE("route: barbell detour avoids both dense blocks") {
    LoadedGraph g = parse_edge_list(
        "a1 a2 0.9\na1 a3 0.9\na1 a4 0.9\na2 a3 0.9\na2 a4 0.9\na3 a4 0.9\n"
        "b1 b2 0.9\nb1 b3 0.9\nb1 b4 0.9\nb2 b3 0.9\nb2 b4 0.9\nb3 b4 0.9\n"
        "a2 b2 0.9\n"
        "s a1 0.1\ns x 0.1\nx y 0.1\ny t 0.1\nt b1 0.1\n");
    NodeId s = g.id_of("s"), t = g.id_of("t");
    MeasurePtr m = parse_measure("mindeg");
    RouteOutcome r = route_with_density_index(g, 0.7, *m, Rational(3), s, t);
    REQUIRE(r.found());
    CHECK(r.certified);
    CHECK(r.cover.size() == 8);
    std::vector<NodeId> want = {s, g.id_of("x"), g.id_of("y"), t};
    CHECK(r.path.nodes == want);
    RouteOutcome oracle = brute_force_cap(g, 0.7, *m, Rational(3), s, t);
    REQUIRE(oracle.found());
    CHECK(oracle.path.nodes == want);
}

TEST_CASE("route: endpoint inside the cover is rejected up front") {
    LoadedGraph g = pendant_core_instance();
    MeasurePtr m = parse_measure("mindeg");
    RouteOutcome r = route_with_density_index(g, 0.7, *m, Rational(1), g.id_of("p"),
                                              g.id_of("t"));
    CHECK_FALSE(r.found());
    CHECK(r.reason == NoPathReason::EndpointRemoved);
    CHECK(r.certified);
}

TEST_CASE("route: rho0 above every density equals plain dijkstra") {
    LoadedGraph g = pendant_core_instance();
    MeasurePtr m = parse_measure("mindeg");
    RouteOutcome r =
        route_with_density_index(g, 0.7, *m, Rational(99), g.id_of("s"), g.id_of("t"));
    REQUIRE(r.found());
    CHECK(r.cover.empty());
    RouteOutcome direct = dijkstra(g.graph, edge_weights(g, WeightPolicy::Unit),
                                   g.id_of("s"), g.id_of("t"));
    REQUIRE(direct.found());
    CHECK(r.path.nodes == direct.path.nodes);
    CHECK(r.path.weight == direct.path.weight);
}

TEST_CASE("route: raising rho0 never turns found into no-path") {
    TRng rng(79);
    MeasurePtr m = parse_measure("mindeg");
    for (int trial = 0; trial < 40; ++trial) {
        LoadedGraph g = testutil::random_loaded_graph(rng, rng.uniform_int(3, 9), 0.5);
        NodeId s = rng.uniform_int(0, g.graph.node_count() - 1);
        NodeId t = rng.uniform_int(0, g.graph.node_count() - 1);
        if (s == t) continue;
        bool was_found = false;
        for (int k = 0; k <= 5; ++k) {
            RouteOutcome r = route_with_density_index(g, 0.5, *m, Rational(k), s, t);
            if (was_found) CHECK(r.found());
            was_found = r.found();
        }
    }
}

TEST_CASE("route agrees with the exhaustive reference on random instances") {
    TRng rng(83);
    const char* measures[] = {"mindeg", "conn", "max(mindeg,conn)"};
    int tested = 0;
    while (tested < 120) {
        LoadedGraph g = testutil::random_loaded_graph(rng, rng.uniform_int(3, 8), 0.55);
        NodeId s = rng.uniform_int(0, g.graph.node_count() - 1);
        NodeId t = rng.uniform_int(0, g.graph.node_count() - 1);
        if (s == t) continue;
        MeasurePtr m = parse_measure(measures[tested % 3]);
        Rational rho0(tested % 4);
        RouteOutcome fast = route_with_density_index(g, 0.5, *m, rho0, s, t);
        RouteOutcome slow = brute_force_cap(g, 0.5, *m, rho0, s, t);
        CHECK(fast.certified);
        CHECK(fast.found() == slow.found());
        if (fast.found()) {
            CHECK(fast.path.weight == doctest::Approx(slow.path.weight).epsilon(1e-9));
            CHECK(fast.path.nodes == slow.path.nodes);
        } else {
            CHECK(fast.reason == slow.reason);
        }
        ++tested;
    }
}

TEST_CASE("cap: triangle-plus-pendant core avoids the triangle") {
    // Congested core is a triangle with a pendant; degeneracy 2, so cap
    // forbids the 2-core (the triangle) and the pendant stays usable.
    LoadedGraph g = parse_edge_list(
        "a b 0.9\nb c 0.9\na c 0.9\nc d 0.9\n"
        "s a 0.1\ns d 0.1\nd t 0.1\nb t 0.1\n");
    MeasurePtr m = parse_measure("mindeg");
    RouteOutcome r = cap_route(g, 0.7, *m, g.id_of("s"), g.id_of("t"));
    REQUIRE(r.found());
    CHECK(r.rho0_used == Rational(2));
    CHECK(r.cover == NodeSet{g.id_of("a"), g.id_of("b"), g.id_of("c")});
    std::vector<NodeId> want = {g.id_of("s"), g.id_of("d"), g.id_of("t")};
    CHECK(r.path.nodes == want);
}

TEST_CASE("cap: empty congested core degenerates to plain dijkstra") {
    LoadedGraph g = parse_edge_list("a b 0.2\nb c 0.2\n");
    MeasurePtr m = parse_measure("mindeg");
    RouteOutcome r = cap_route(g, 0.7, *m, g.id_of("a"), g.id_of("c"));
    REQUIRE(r.found());
    CHECK(r.rho0_used == Rational(0));
    CHECK(r.path.nodes.size() == 3);
}

TEST_CASE("cap: single congested edge forbids both endpoints") {
    LoadedGraph g = parse_edge_list("a b 0.9\ns a 0.1\nb t 0.1\ns t 0.1\n");
    MeasurePtr m = parse_measure("mindeg");
    RouteOutcome r = cap_route(g, 0.7, *m, g.id_of("s"), g.id_of("t"));
    REQUIRE(r.found());
    CHECK(r.rho0_used == Rational(1));
    CHECK(r.path.nodes == std::vector<NodeId>{g.id_of("s"), g.id_of("t")});
    RouteOutcome blocked = cap_route(g, 0.7, *m, g.id_of("s"), g.id_of("a"));
    CHECK_FALSE(blocked.found());
    CHECK(blocked.reason == NoPathReason::EndpointRemoved);
}

TEST_CASE("cap matches the strongest threshold the reference accepts") {
    TRng rng(89);
    MeasurePtr m = parse_measure("mindeg");
    int tested = 0;
    while (tested < 40) {
        LoadedGraph g = testutil::random_loaded_graph(rng, rng.uniform_int(3, 8), 0.5);
        NodeId s = rng.uniform_int(0, g.graph.node_count() - 1);
        NodeId t = rng.uniform_int(0, g.graph.node_count() - 1);
        if (s == t) continue;
        RouteOutcome fast = cap_route(g, 0.5, *m, s, t);
        RouteOutcome slow = brute_force_cap(g, 0.5, *m, fast.rho0_used, s, t);
        CHECK(fast.found() == slow.found());
        if (fast.found())
            CHECK(fast.path.weight == doctest::Approx(slow.path.weight).epsilon(1e-9));
        ++tested;
    }
}

TEST_CASE("density index: spot values on the pendant instance") {
    LoadedGraph g = pendant_core_instance();
    MeasurePtr m = parse_measure("mindeg");
    auto idx = [&](std::vector<NodeId> p) {
        return density_index(g, 0.7, *m, p).value;
    };
    // Straight across the light edge: disjoint from the congested core.
    CHECK(idx({g.id_of("s"), g.id_of("t")}) == Rational(0));
    // Through the pendant only: inside the 1-core, outside the 2-core.
    CHECK(idx({g.id_of("s"), g.id_of("p"), g.id_of("t")}) == Rational(2));
    // Through a clique node: only the empty cover past the degeneracy avoids it.
    CHECK(idx({g.id_of("s"), g.id_of("a"), g.id_of("t")}) == Rational(4));
}

TEST_CASE("density index: grid minimality certified by subgraph enumeration") {
    TRng rng(97);
    MeasurePtr m = parse_measure("mindeg");
    int tested = 0;
    while (tested < 30) {
        LoadedGraph g = testutil::random_loaded_graph(rng, rng.uniform_int(3, 8), 0.5);
        NodeId s = rng.uniform_int(0, g.graph.node_count() - 1);
        NodeId t = rng.uniform_int(0, g.graph.node_count() - 1);
        if (s == t || !is_connected(g.graph)) continue;
        RouteOutcome sp = dijkstra(g.graph, edge_weights(g, WeightPolicy::Unit), s, t);
        REQUIRE(sp.found());
        DensityIndexResult r = density_index(g, 0.5, *m, sp.path.nodes);
        CHECK(std::find(r.grid.begin(), r.grid.end(), r.value) != r.grid.end());

        CongestedCore cc = congested_core(g, 0.5);
        NodeSet path_set = normalize_node_set(sp.path.nodes);
        auto hits_at = [&](const Rational& rho0) {
            if (cc.core.node_count() == 0) return false;
            for (const ScoredSubgraph& s2 : enumerate_subgraph_values(cc.core, *m))
                if (rho0 <= s2.value &&
                    !set_intersection(cc.to_original(s2.nodes), path_set).empty())
                    return true;
            return false;
        };
        CHECK_FALSE(hits_at(r.value));
        auto pos = std::find(r.grid.begin(), r.grid.end(), r.value);
        if (pos != r.grid.begin()) CHECK(hits_at(*std::prev(pos)));
        ++tested;
    }
}

TEST_CASE("round trip: certified found paths sit at or below the requested rho0") {
    TRng rng(101);
    MeasurePtr m = parse_measure("mindeg");
    int tested = 0;
    while (tested < 60) {
        LoadedGraph g = testutil::random_loaded_graph(rng, rng.uniform_int(3, 9), 0.5);
        NodeId s = rng.uniform_int(0, g.graph.node_count() - 1);
        NodeId t = rng.uniform_int(0, g.graph.node_count() - 1);
        if (s == t) continue;
        Rational rho0(tested % 5);
        RouteOutcome r = route_with_density_index(g, 0.5, *m, rho0, s, t);
        ++tested;
        if (!r.found() || !r.certified) continue;
        DensityIndexResult idx = density_index(g, 0.5, *m, r.path.nodes);
        CHECK(idx.value <= rho0);
    }
}
