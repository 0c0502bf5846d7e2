#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rigi/graph.hpp"
#include "rigi/packing.hpp"

using namespace rigi;

namespace {

// Exhaustive strength oracle: minimum of crossing/(parts-1) over every vertex
// partition with at least two parts (restricted-growth enumeration).
Rat strength_brute(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> part(n, 0);
    Rat best(-1);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            if (used < 2) return;
            long cross = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (part[a] != part[b]) cross += g.multiplicity(a, b);
            Rat ratio = make_rat(cross, used - 1);
            if (best < 0 || ratio < best) best = ratio;
            return;
        }
        for (int p = 0; p <= used; ++p) {
            part[v] = p;
            rec(v + 1, std::max(used, p + 1));
        }
    };
    part[0] = 0;
    rec(1, 1);
    return best;
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

void verify_packing(const Multigraph& g, const PackingResult& r) {
    int n = g.vertex_count();
    // forests: edge-disjoint spanning trees inside g
    Multigraph budget = g;
    for (const auto& tree : r.forests) {
        REQUIRE(static_cast<int>(tree.size()) == n - 1);
        Multigraph t(n);
        for (auto [u, v] : tree) {
            REQUIRE(budget.multiplicity(u, v) > 0);
            budget.set_multiplicity(u, v, budget.multiplicity(u, v) - 1);
            t.set_multiplicity(u, v, t.multiplicity(u, v) + 1);
        }
        CHECK(is_connected(t));  // n-1 edges + connected = spanning tree
    }
    // deficiency: |X| < (k+1)(c(G-X)-1)
    REQUIRE(r.deficiency_edges.has_value());
    long x = static_cast<long>(r.deficiency_edges->size());
    long c = r.deficiency_components;
    CHECK(c >= 2);
    CHECK(x < (r.tree_count + 1) * (c - 1));
}

}  // namespace

TEST_CASE("tree packing fixed cases") {
    auto k4 = max_tree_packing(complete_graph(4));
    CHECK(k4.tree_count == 2);
    verify_packing(Multigraph::from_simple(complete_graph(4)), k4);

    CHECK(max_tree_packing(path_graph(5)).tree_count == 1);
    CHECK(max_tree_packing(cycle_graph(6)).tree_count == 1);
    CHECK(max_tree_packing(complete_graph(6)).tree_count == 3);
    CHECK(max_tree_packing(scale(complete_graph(4), 2)).tree_count == 4);

    auto disc = max_tree_packing(disjoint_union(cycle_graph(3), cycle_graph(3)));
    CHECK(disc.tree_count == 0);

    CHECK(packs_spanning_trees(Multigraph::from_simple(complete_graph(4)), 2));
    CHECK_FALSE(packs_spanning_trees(Multigraph::from_simple(complete_graph(4)), 3));
}

TEST_CASE("packing certificates verify on random multigraphs") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        SimpleGraph base = random_connected(rng, n, static_cast<int>(rng() % 8));
        Multigraph g = scale(base, 1 + static_cast<int>(rng() % 3));
        verify_packing(g, max_tree_packing(g));
    }
}

TEST_CASE("strength fixed cases") {
    CHECK(strength(complete_graph(4)).value == 2);
    CHECK(strength(complete_graph(5)).value == make_rat(5, 2));
    CHECK(strength(complete_graph(7)).value == make_rat(7, 2));
    CHECK(strength(complete_graph(8)).value == 4);
    CHECK(strength(path_graph(4)).value == 1);
    CHECK(strength(petersen_graph()).value == make_rat(5, 3));

    // witness partition attains the value
    auto sv = strength(complete_graph(5));
    long cross = 0;
    std::vector<int> owner(5, -1);
    for (size_t p = 0; p < sv.witness_partition.size(); ++p)
        for (int v : sv.witness_partition[p]) owner[v] = static_cast<int>(p);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (owner[u] != owner[v]) cross++;
    CHECK(make_rat(cross, static_cast<long>(sv.witness_partition.size()) - 1) == sv.value);
}

TEST_CASE("strength equals partition brute force") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);  // n <= 7
        SimpleGraph base = random_connected(rng, n, static_cast<int>(rng() % 10));
        CHECK(strength(base).value == strength_brute(Multigraph::from_simple(base)));
    }
    // multigraphs with multiplicity up to 3, n <= 6
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        Multigraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.set_multiplicity(u, v, static_cast<int>(rng() % 4));
        for (int v = 1; v < n; ++v)
            if (g.degree(v) == 0 || !is_connected(g)) g.set_multiplicity(v - 1, v, 1);
        if (!is_connected(g)) continue;
        CHECK(strength(g).value == strength_brute(g));
    }
}

TEST_CASE("strength scaling law") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        SimpleGraph base = random_connected(rng, n, static_cast<int>(rng() % 8));
        Rat eta = strength(base).value;
        for (int t = 2; t <= 4; ++t)
            CHECK(strength(scale(base, t)).value == Rat(t) * eta);
    }
}

TEST_CASE("floor of strength is the packing number") {
    std::mt19937 rng(44);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        SimpleGraph base = random_connected(rng, n, static_cast<int>(rng() % 12));
        Multigraph g = scale(base, 1 + static_cast<int>(rng() % 2));
        Rat eta = strength(g).value;
        long fl = static_cast<long>(mpz_class(eta.get_num() / eta.get_den()).get_si());
        CHECK(max_tree_packing(g).tree_count == fl);
    }
}

TEST_CASE("packs k trees minus any edge") {
    CHECK(packs_k_trees_minus_any_edge(Multigraph::from_simple(complete_graph(5)), 2));
    CHECK_FALSE(packs_k_trees_minus_any_edge(Multigraph::from_simple(complete_graph(4)), 2));
    // literal per-edge cross-check on small graphs
    std::mt19937 rng(45);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 3 + static_cast<int>(rng() % 4);
        SimpleGraph base = random_connected(rng, n, static_cast<int>(rng() % 8));
        Multigraph g = scale(base, 1 + static_cast<int>(rng() % 2));
        for (int k = 1; k <= 3; ++k) {
            bool literal = true;
            for (int u = 0; u < n && literal; ++u)
                for (int v = u + 1; v < n && literal; ++v) {
                    if (g.multiplicity(u, v) == 0) continue;
                    Multigraph h = g.without_edge_copy(u, v);
                    if (!is_connected(h) || !packs_spanning_trees(h, k)) literal = false;
                }
            CHECK(packs_k_trees_minus_any_edge(g, k) == literal);
        }
    }
}

TEST_CASE("body-bar rigidity") {
    CHECK(body_bar_rigid(Multigraph::from_simple(complete_graph(7)), 2));   // eta 3.5 >= 3
    CHECK_FALSE(body_bar_rigid(Multigraph::from_simple(complete_graph(4)), 2));  // eta 2 < 3
    CHECK(body_bar_globally_rigid(Multigraph::from_simple(complete_graph(8)), 2));  // eta 4 > 3
    CHECK(body_bar_globally_rigid(Multigraph::from_simple(complete_graph(7)), 2));  // eta 3.5 > 3
    CHECK_FALSE(body_bar_globally_rigid(Multigraph::from_simple(complete_graph(6)), 2));  // eta 3
    // multiplicity must stay below d(d+1)/2
    CHECK_THROWS_AS(body_bar_rigid(scale(complete_graph(3), 3), 2), std::domain_error);
    CHECK(body_bar_rigid(scale(complete_graph(3), 2), 2));  // eta(2K3) = 3
}

TEST_CASE("body-hinge rigidity") {
    CHECK(body_hinge_rigid(complete_graph(4), 2));  // eta(2 K4) = 4 >= 3
    CHECK_FALSE(body_hinge_rigid(path_graph(4), 2));  // eta(2 tree) = 2 < 3
    CHECK(body_hinge_globally_rigid(complete_graph(4), 2));  // 3-edge-connected
    CHECK_FALSE(body_hinge_globally_rigid(cycle_graph(5), 2));
    CHECK(body_hinge_globally_rigid(complete_graph(5), 3));  // eta(5 K5) = 12.5 > 6
    CHECK(body_hinge_globally_rigid(complete_graph(4), 3));  // eta(5 K4) = 10 > 6
    CHECK_THROWS_AS(body_hinge_rigid(complete_graph(4), 1), std::domain_error);
}

TEST_CASE("body-hinge global rigidity d>=3 equals per-edge packing") {
    std::mt19937 rng(46);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 3 + static_cast<int>(rng() % 3);
        SimpleGraph base = random_connected(rng, n, static_cast<int>(rng() % 6));
        int d = 3, big = 6;
        Multigraph scaled = scale(base, big - 1);
        bool literal = true;
        for (int u = 0; u < n && literal; ++u)
            for (int v = u + 1; v < n && literal; ++v) {
                if (scaled.multiplicity(u, v) == 0) continue;
                Multigraph h = scaled.without_edge_copy(u, v);
                if (!is_connected(h) || !packs_spanning_trees(h, big)) literal = false;
            }
        CHECK(body_hinge_globally_rigid(base, d) == literal);
    }
}
