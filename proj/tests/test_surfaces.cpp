#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rigi/graph.hpp"
#include "rigi/packing.hpp"
#include "rigi/surfaces.hpp"

using namespace rigi;

namespace {

// Brute force for the general surface of revolution: some spanning tree T plus
// a subgraph of E \ T covering all vertices with exactly one cycle per
// component. The second part exists iff every component of (V, E \ T) keeps a
// cycle.
bool general_revolution_brute(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (!is_connected(g)) return false;
    if (g.edge_count() == n * (n - 1) / 2) return true;  // complete override
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    if (n < 1) return false;
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(pick.size()) == n - 1) {
            // is pick a spanning tree?
            std::vector<std::pair<int, int>> tree, rest;
            std::vector<bool> used(m, false);
            for (int e : pick) used[e] = true;
            for (int e = 0; e < m; ++e) (used[e] ? tree : rest).push_back(es[e]);
            SimpleGraph t = SimpleGraph::from_edges(n, tree);
            if (!is_connected(t)) return false;
            // every component of the complement must contain a cycle
            SimpleGraph r = SimpleGraph::from_edges(n, rest);
            for (const auto& comp : connected_components(r)) {
                long edges_inside = 0;
                std::vector<bool> in(n, false);
                for (int v : comp) in[v] = true;
                for (auto [u, v] : rest)
                    if (in[u] && in[v]) edges_inside++;
                if (edges_inside < static_cast<long>(comp.size())) return false;  // a tree
            }
            return true;
        }
        for (int e = from; e < m; ++e) {
            pick.push_back(e);
            if (rec(e + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (n == 1) return true;
    return rec(0);
}

SimpleGraph random_connected(std::mt19937& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back(static_cast<int>(rng() % v), v);
    for (int t = 0; t < extra_edges; ++t) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        SimpleGraph probe = SimpleGraph::from_edges(n, es);
        if (!probe.has_edge(u, v)) es.emplace_back(u, v);
    }
    return SimpleGraph::from_edges(n, es);
}

}  // namespace

TEST_CASE("fixed surface cases") {
    // complete graphs are rigid on every surface; K4 has only 6 < 2n-1 edges,
    // so the completeness override is essential
    CHECK(rigid_on_surface(complete_graph(4), SurfaceKind::GeneralRevolution));
    CHECK(rigid_on_surface(complete_graph(4), SurfaceKind::Cylinder));
    CHECK(rigid_on_surface(complete_graph(4), SurfaceKind::Sphere));

    CHECK_FALSE(rigid_on_surface(cycle_graph(5), SurfaceKind::Cylinder));
    CHECK_FALSE(rigid_on_surface(cycle_graph(5), SurfaceKind::GeneralRevolution));
    CHECK(rigid_on_surface(complete_graph(5).without_edge(0, 1),
                           SurfaceKind::GeneralRevolution));
    // sphere = plane rigidity
    CHECK(rigid_on_surface(complete_bipartite(3, 3), SurfaceKind::Sphere));
    CHECK_FALSE(rigid_on_surface(complete_bipartite(3, 3), SurfaceKind::Cylinder));
    CHECK_FALSE(rigid_on_surface(petersen_graph(), SurfaceKind::Sphere));
    // only 15 < 2n-1 edges, so no tree + spanning one-cycle-per-component pair
    CHECK_FALSE(rigid_on_surface(petersen_graph(), SurfaceKind::GeneralRevolution));
}

TEST_CASE("matroid union rank examples") {
    Multigraph k4 = Multigraph::from_simple(complete_graph(4));
    CHECK(matroid_union_rank(k4, MatroidKind::Graphic, MatroidKind::Graphic) == 6);
    Multigraph c5 = Multigraph::from_simple(cycle_graph(5));
    CHECK(matroid_union_rank(c5, MatroidKind::Graphic, MatroidKind::Bicircular) == 5);
    Multigraph tree = Multigraph::from_simple(path_graph(6));
    CHECK(matroid_union_rank(tree, MatroidKind::Graphic, MatroidKind::Bicircular) == 5);
}

TEST_CASE("general revolution rigidity equals 2-coloring brute force") {
    std::mt19937 rng(51);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);  // n <= 6
        SimpleGraph g = random_connected(rng, n, static_cast<int>(rng() % 10));
        CAPTURE(emit_graph6(g));
        CHECK(rigid_on_surface(g, SurfaceKind::GeneralRevolution) ==
              general_revolution_brute(g));
    }
}

TEST_CASE("two trees plus an extra edge imply general revolution rigidity") {
    std::mt19937 rng(52);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 3 + static_cast<int>(rng() % 5);
        SimpleGraph g = random_connected(rng, n, static_cast<int>(rng() % 12));
        bool two_trees = packs_spanning_trees(Multigraph::from_simple(g), 2);
        if (two_trees && g.edge_count() >= 2 * n - 1)
            CHECK(rigid_on_surface(g, SurfaceKind::GeneralRevolution));
    }
}

TEST_CASE("cylinder redundancy and global rigidity") {
    CHECK(redundantly_rigid_on_cylinder(complete_graph(5)));
    CHECK(globally_rigid_on_cylinder(complete_graph(5)));
    CHECK_FALSE(redundantly_rigid_on_cylinder(path_graph(5)));
    CHECK_FALSE(redundantly_rigid_on_cylinder(complete_graph(4)));  // K4-e: 5 < 2n-2
    CHECK(globally_rigid_on_cylinder(complete_graph(4)));           // complete override
    CHECK_FALSE(globally_rigid_on_cylinder(cycle_graph(6)));
}
