#include "rigi/catalog.hpp"

#include <map>
#include <sstream>

#include "rigi/census.hpp"
#include "rigi/connectivity.hpp"
#include "rigi/packing.hpp"
#include "rigi/poly.hpp"
#include "rigi/rigidity2d.hpp"
#include "rigi/spectral.hpp"
#include "rigi/surfaces.hpp"

namespace rigi {

namespace {

using Edges = std::vector<std::pair<int, int>>;

void add_clique(Edges& es, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) es.emplace_back(verts[i], verts[j]);
}

/// Ring of r K4 blocks: block x is glued to block x+1 by slot1 -> slot0 and to
/// block x+shift by slot2 -> slot3 (the repeated pattern of the figures).
SimpleGraph ring_of_k4(int r, int shift) {
    Edges es;
    auto v = [&](int x, int j) { return 4 * ((x % r + r) % r) + j; };
    for (int x = 0; x < r; ++x) add_clique(es, {v(x, 0), v(x, 1), v(x, 2), v(x, 3)});
    for (int x = 0; x < r; ++x) {
        es.emplace_back(v(x, 1), v(x + 1, 0));
        es.emplace_back(v(x, 2), v(x + shift, 3));
    }
    return SimpleGraph::from_edges(4 * r, es);
}

SimpleGraph fig1_special30() {
    Edges es;
    auto c = [](int i) { return i; };                       // central K5
    auto o = [](int x, int j) { return 5 + 5 * (x % 5) + j; };  // outer cliques
    add_clique(es, {0, 1, 2, 3, 4});
    for (int x = 0; x < 5; ++x)
        add_clique(es, {o(x, 0), o(x, 1), o(x, 2), o(x, 3), o(x, 4)});
    for (int x = 0; x < 5; ++x) {
        es.emplace_back(o(x, 3), o((x + 1) % 5, 2));   // slot4 -> next slot3
        es.emplace_back(c(x), o((x + 4) % 5, 0));      // center fan
        es.emplace_back(o(x, 1), o((x + 3) % 5, 4));   // slot2 -> +3 slot5
    }
    return SimpleGraph::from_edges(30, es);
}

/// K4 with one edge subdivided: the 5-vertex half of the bridged cubic graph.
void add_subdivided_k4(Edges& es, int base) {
    int a1 = base, a2 = base + 1, a3 = base + 2, a4 = base + 3, a5 = base + 4;
    for (auto [x, y] : Edges{{a1, a2}, {a1, a5}, {a2, a3}, {a2, a4}, {a3, a4}, {a3, a5}, {a4, a5}})
        es.emplace_back(x, y);
}

SimpleGraph fig3_cubic_bridge10() {
    Edges es;
    add_subdivided_k4(es, 0);
    add_subdivided_k4(es, 5);
    es.emplace_back(0, 5);
    return SimpleGraph::from_edges(10, es);
}

/// K5 minus one edge on 0..4 with the missing pair (2,3).
void add_k5_minus_edge(Edges& es, int base) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 2 && j == 3)) es.emplace_back(base + i, base + j);
}

SimpleGraph fig3_quartic_cut2_10() {
    Edges es;
    add_k5_minus_edge(es, 0);
    add_k5_minus_edge(es, 5);
    es.emplace_back(2, 8);
    es.emplace_back(3, 7);
    return SimpleGraph::from_edges(10, es);
}

SimpleGraph fig4_b() {
    Edges es;
    add_k5_minus_edge(es, 0);
    // second block: 6 vertices 5..10
    for (auto [x, y] : Edges{{5, 6}, {5, 8}, {5, 9}, {5, 10}, {6, 7}, {6, 9},
                             {6, 10}, {7, 9}, {7, 10}, {8, 9}, {8, 10}})
        es.emplace_back(x, y);
    es.emplace_back(2, 8);
    es.emplace_back(3, 7);
    return SimpleGraph::from_edges(11, es);
}

SimpleGraph fig4_c() {
    // ring of four K4s: slot1 -> next slot3 around the square, opposite blocks
    // joined through slot2 (inner) and slot0 (outer) diagonals
    Edges es;
    auto v = [](int x, int j) { return 4 * (x % 4) + j; };
    for (int x = 0; x < 4; ++x) add_clique(es, {v(x, 0), v(x, 1), v(x, 2), v(x, 3)});
    for (int x = 0; x < 4; ++x) es.emplace_back(v(x, 1), v((x + 1) % 4, 3));
    es.emplace_back(v(0, 2), v(2, 2));
    es.emplace_back(v(1, 2), v(3, 2));
    es.emplace_back(v(0, 0), v(2, 0));
    es.emplace_back(v(1, 0), v(3, 0));
    return SimpleGraph::from_edges(16, es);
}

/// K34 block: {base,base+1,base+4} x {base+2,base+3,base+5,base+6}.
void add_k34_block(Edges& es, int base) {
    for (int i : {0, 1, 4})
        for (int j : {2, 3, 5, 6}) es.emplace_back(base + i, base + j);
}

SimpleGraph fig5_a() {
    Edges es;
    add_k34_block(es, 0);
    add_k34_block(es, 7);
    int c1 = 14, c2 = 15;
    for (int x : {2, 5, 9, 12}) es.emplace_back(x, c1);
    for (int x : {3, 6, 10, 13}) es.emplace_back(x, c2);
    return SimpleGraph::from_edges(16, es);
}

SimpleGraph fig5_b() {
    Edges es;
    add_k34_block(es, 0);
    add_k34_block(es, 7);
    // 8-vertex block 14..21: K44 on {14,16,18,20} x {15,17,19,21} minus the
    // matching {14-15, 16-17}
    for (int i : {14, 16, 18, 20})
        for (int j : {15, 17, 19, 21}) {
            if ((i == 14 && j == 15) || (i == 16 && j == 17)) continue;
            es.emplace_back(i, j);
        }
    for (auto [x, y] : Edges{{3, 10}, {6, 13}, {2, 16}, {5, 14}, {9, 17}, {12, 15}})
        es.emplace_back(x, y);
    return SimpleGraph::from_edges(22, es);
}

SimpleGraph fig6_bip28() {
    Edges es;
    for (int x = 0; x < 4; ++x) add_k34_block(es, 7 * x);
    auto v = [](int x, int j) { return 7 * x + j; };
    int c1 = 28, c2 = 29, c3 = 30, c4 = 31;
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {v(0, 2), c2}, {v(0, 5), c3}, {v(0, 3), c1}, {v(0, 6), c4},
             {v(1, 2), c3}, {v(1, 5), c4}, {v(1, 3), c2}, {v(1, 6), c1},
             {v(2, 2), c4}, {v(2, 5), c1}, {v(2, 3), c3}, {v(2, 6), c2},
             {v(3, 2), c1}, {v(3, 5), c2}, {v(3, 3), c4}, {v(3, 6), c3}})
        es.emplace_back(a, b);
    return SimpleGraph::from_edges(32, es);
}

SimpleGraph fig7_d() {
    // eight K4 blocks in two rings of four, wired as the K44 clique inflation:
    // the unique 32-vertex member of the non-rigid vertex-transitive family
    return clique_replace(complete_bipartite(4, 4), 4);
}

SimpleGraph fig7_e() {
    Edges es;
    auto c = [](int j) { return j; };
    auto v = [](int x, int j) { return 4 + 4 * x + j; };  // x in 0..7
    add_clique(es, {0, 1, 2, 3});
    for (int x = 0; x < 8; ++x) add_clique(es, {v(x, 0), v(x, 1), v(x, 2), v(x, 3)});
    es.emplace_back(v(0, 2), c(1));
    es.emplace_back(v(2, 2), c(3));
    es.emplace_back(v(1, 2), c(2));
    es.emplace_back(v(3, 2), c(0));
    for (int x = 0; x < 4; ++x) es.emplace_back(v(4 + x, 1), v(4 + (x + 1) % 4, 0));
    es.emplace_back(v(0, 1), v(2, 3));
    es.emplace_back(v(1, 1), v(3, 3));
    es.emplace_back(v(1, 0), v(6, 3));
    es.emplace_back(v(2, 0), v(6, 2));
    es.emplace_back(v(0, 3), v(4, 2));
    es.emplace_back(v(3, 1), v(4, 3));
    es.emplace_back(v(0, 0), v(5, 3));
    es.emplace_back(v(1, 3), v(5, 2));
    es.emplace_back(v(3, 0), v(7, 2));
    es.emplace_back(v(2, 1), v(7, 3));
    return SimpleGraph::from_edges(36, es);
}

SimpleGraph fig7_f() {
    Edges es;
    auto v = [](int x, int j) { return 4 * x + j; };  // x in 0..9
    for (int x = 0; x < 10; ++x) add_clique(es, {v(x, 0), v(x, 1), v(x, 2), v(x, 3)});
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {v(0, 3), v(5, 3)}, {v(0, 2), v(1, 3)}, {v(0, 1), v(2, 0)}, {v(0, 0), v(6, 0)},
             {v(1, 0), v(4, 3)}, {v(1, 1), v(3, 3)}, {v(2, 3), v(3, 0)}, {v(2, 2), v(4, 0)},
             {v(5, 1), v(8, 2)}, {v(5, 2), v(7, 3)}, {v(6, 2), v(7, 1)}, {v(6, 1), v(8, 0)},
             {v(5, 0), v(3, 2)}, {v(7, 0), v(1, 2)}, {v(8, 3), v(2, 1)}, {v(6, 3), v(4, 1)},
             {v(9, 0), v(4, 2)}, {v(9, 1), v(8, 1)}, {v(9, 2), v(7, 2)}, {v(9, 3), v(3, 1)}})
        es.emplace_back(a, b);
    return SimpleGraph::from_edges(40, es);
}

SimpleGraph fig8(int which) {
    Edges es;
    add_subdivided_k4(es, 0);
    Edges b;
    switch (which) {
        case 0:
            b = {{5, 6}, {5, 7}, {6, 7}, {6, 9}, {7, 10}, {8, 9}, {8, 10}, {9, 10},
                 {5, 11}, {8, 11}};
            break;
        case 1:
            b = {{5, 7}, {6, 7}, {5, 8}, {6, 9}, {7, 10}, {8, 9}, {8, 10}, {9, 10},
                 {5, 11}, {6, 11}};
            break;
        default:
            b = {{5, 8}, {5, 10}, {7, 6}, {7, 8}, {7, 10}, {9, 6}, {9, 8}, {9, 10},
                 {5, 11}, {6, 11}};
            break;
    }
    for (auto [x, y] : b) es.emplace_back(x, y);
    es.emplace_back(0, 11);  // the bridge
    return SimpleGraph::from_edges(12, es);
}

SimpleGraph fig9_a() {
    Edges half = {{0, 1}, {0, 3}, {2, 1}, {2, 5}, {4, 3}, {4, 5}, {0, 6},
                  {2, 6}, {6, 8}, {5, 8}, {1, 7}, {3, 7}, {7, 9}, {4, 9}};
    Edges es;
    for (auto [x, y] : half) {
        es.emplace_back(x, y);
        es.emplace_back(x + 10, y + 10);
    }
    es.emplace_back(8, 18);
    es.emplace_back(9, 19);
    return SimpleGraph::from_edges(20, es);
}

SimpleGraph fig9_b() {
    Edges es = {{0, 1}, {0, 3}, {2, 1},  {2, 3},  {4, 5},  {0, 6},  {2, 8},  {4, 6}, {4, 8},
                {6, 10}, {8, 10}, {1, 7}, {3, 9},  {5, 7},  {5, 9},  {7, 11}, {9, 11}};
    Edges b = {{12, 13}, {12, 15}, {12, 17}, {14, 13}, {14, 15}, {14, 17},
               {16, 13}, {16, 15}, {16, 18}, {17, 19}, {18, 19}};
    for (auto [x, y] : b) es.emplace_back(x, y);
    es.emplace_back(10, 19);
    es.emplace_back(11, 18);
    return SimpleGraph::from_edges(20, es);
}

struct Spec {
    SimpleGraph (*build)();
    std::vector<AssertedFact> facts;
};

SimpleGraph build_fig2_ring3() { return ring_of_k4(3, 1); }
SimpleGraph build_fig2_ring5() { return ring_of_k4(5, 2); }
SimpleGraph build_fig7_c() { return ring_of_k4(6, 2); }
SimpleGraph build_fig8_a() { return fig8(0); }
SimpleGraph build_fig8_b() { return fig8(1); }
SimpleGraph build_fig8_c() { return fig8(2); }

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "fig1_special30",     "fig2_ring3K4",  "fig2_ring5K4",  "fig3_cubic_bridge10",
        "fig3_quartic_cut2_10", "fig4_a",      "fig4_b",        "fig4_c",
        "fig4_d",             "fig5_a",        "fig5_b",        "fig6_bip28",
        "fig7_a",             "fig7_b",        "fig7_c",        "fig7_d",
        "fig7_e",             "fig7_f",        "fig8_a",        "fig8_b",
        "fig8_c",             "fig9_a",        "fig9_b"};
    return names;
}

namespace {

std::map<std::string, Spec>& registry() {
    auto facts = [](std::initializer_list<AssertedFact> fs) {
        return std::vector<AssertedFact>(fs);
    };
    static std::map<std::string, Spec> reg = {
        {"fig1_special30",
         {fig1_special30,
          facts({{"vertex_count", "30", "Fig. 1"},
                 {"regular_degree", "5", "Fig. 1"},
                 {"connected", "true", "Fig. 1"},
                 {"vertex_transitive", "true", "Thm on vertex-transitive case, Fig. 1"},
                 {"rigid", "true", "Fig. 1 caption"},
                 {"globally_rigid", "false", "Fig. 1 caption"},
                 {"redundantly_rigid", "false", "3-connected but not globally rigid"},
                 {"contracts_to_K6_by_5cliques", "true", "vertex-transitive lemma proof"}})}},
        {"fig2_ring3K4",
         {build_fig2_ring3,
          facts({{"vertex_count", "12", "Fig. 2 left"},
                 {"regular_degree", "4", "Fig. 2"},
                 {"vertex_transitive", "true", "Fig. 2 caption"},
                 {"rigid", "true", "Fig. 2 caption"},
                 {"globally_rigid", "false", "Fig. 2 caption"},
                 {"max_clique_at_most_3", "false", "K4 blocks"}})}},
        {"fig2_ring5K4",
         {build_fig2_ring5,
          facts({{"vertex_count", "20", "Fig. 2 right"},
                 {"regular_degree", "4", "Fig. 2"},
                 {"vertex_transitive", "true", "Fig. 2 caption"},
                 {"rigid", "false", "Fig. 2 caption"}})}},
        {"fig3_cubic_bridge10",
         {fig3_cubic_bridge10,
          facts({{"vertex_count", "10", "Fig. 3 left"},
                 {"edge_count", "15", "Fig. 3 left"},
                 {"regular_degree", "3", "Fig. 3 caption"},
                 {"edge_connectivity", "1", "Fig. 3 caption"},
                 {"ramanujan", "true", "cubic Ramanujan discussion"},
                 {"charpoly_divisible_by_x3_7x_2", "true", "root of x^3-7x-2"},
                 {"tree_packing", "1", "bridge blocks two trees"},
                 {"body_hinge_rigid_d2", "false", "not body-hinge rigid"},
                 {"body_hinge_rigid_d3", "false", "not body-hinge rigid for any d"}})}},
        {"fig3_quartic_cut2_10",
         {fig3_quartic_cut2_10,
          facts({{"vertex_count", "10", "Fig. 3 right"},
                 {"regular_degree", "4", "Fig. 3 caption"},
                 {"edge_connectivity", "2", "Fig. 3 caption"},
                 {"ramanujan", "true", "4-regular Ramanujan discussion"},
                 {"charpoly_shares_root_with_x2_x_8", "true", "(1+sqrt 33)/2 eigenvalue"},
                 {"body_hinge_globally_rigid_d2", "false", "edge connectivity 2"},
                 {"redundantly_rigid_on_cylinder", "false", "cylinder discussion"},
                 {"rigid", "false", "one of the four non-rigid graphs"}})}},
        {"fig4_a",
         {fig3_quartic_cut2_10,
          facts({{"vertex_count", "10", "Fig. 4"},
                 {"regular_degree", "4", "Fig. 4"},
                 {"ramanujan", "true", "Fig. 4 caption"},
                 {"rigid", "false", "Fig. 4 caption"}})}},
        {"fig4_b",
         {fig4_b,
          facts({{"vertex_count", "11", "Fig. 4"},
                 {"regular_degree", "4", "Fig. 4"},
                 {"ramanujan", "true", "Fig. 4 caption"},
                 {"rigid", "false", "Fig. 4 caption"}})}},
        {"fig4_c",
         {fig4_c,
          facts({{"vertex_count", "16", "Fig. 4"},
                 {"regular_degree", "4", "Fig. 4"},
                 {"ramanujan", "true", "Fig. 4 caption"},
                 {"rigid", "false", "Fig. 4 caption"}})}},
        {"fig4_d",
         {[] { return ring_of_k4(4, 1); },
          facts({{"vertex_count", "16", "Fig. 4"},
                 {"regular_degree", "4", "Fig. 4"},
                 {"ramanujan", "true", "Fig. 4 caption"},
                 {"rigid", "false", "Fig. 4 caption"},
                 {"vertex_transitive", "true", "also first graph of the VT list"}})}},
        {"fig5_a",
         {fig5_a,
          facts({{"vertex_count", "16", "Fig. 5"},
                 {"regular_degree", "4", "Fig. 5"},
                 {"bipartite", "true", "Fig. 5 caption"},
                 {"ramanujan", "true", "Fig. 5 caption"},
                 {"rigid", "true", "Fig. 5 caption"},
                 {"globally_rigid", "false", "Fig. 5 caption"}})}},
        {"fig5_b",
         {fig5_b,
          facts({{"vertex_count", "22", "Fig. 5"},
                 {"regular_degree", "4", "Fig. 5"},
                 {"bipartite", "true", "Fig. 5 caption"},
                 {"ramanujan", "true", "Fig. 5 caption"},
                 {"rigid", "true", "Fig. 5 caption"},
                 {"globally_rigid", "false", "Fig. 5 caption"}})}},
        {"fig6_bip28",
         {fig6_bip28,
          facts({{"vertex_count", "32", "Fig. 6"},
                 {"regular_degree", "4", "Fig. 6"},
                 {"bipartite", "true", "Fig. 6 caption"},
                 {"ramanujan", "true", "Fig. 6 caption"},
                 {"rigid", "false", "Fig. 6 caption"}})}},
        {"fig7_a",
         {[] { return ring_of_k4(4, 1); },
          facts({{"vertex_count", "16", "Fig. 7"},
                 {"regular_degree", "4", "Fig. 7"},
                 {"vertex_transitive", "true", "Fig. 7 caption"},
                 {"ramanujan", "true", "Fig. 7 caption"},
                 {"rigid", "false", "Fig. 7 caption"}})}},
        {"fig7_b",
         {build_fig2_ring5,
          facts({{"vertex_count", "20", "Fig. 7"},
                 {"regular_degree", "4", "Fig. 7"},
                 {"vertex_transitive", "true", "Fig. 7 caption"},
                 {"ramanujan", "true", "Fig. 7 caption"},
                 {"rigid", "false", "Fig. 7 caption"}})}},
        {"fig7_c",
         {build_fig7_c,
          facts({{"vertex_count", "24", "Fig. 7"},
                 {"regular_degree", "4", "Fig. 7"},
                 {"vertex_transitive", "true", "Fig. 7 caption"},
                 {"ramanujan", "true", "Fig. 7 caption"},
                 {"rigid", "false", "Fig. 7 caption"}})}},
        {"fig7_d",
         {fig7_d,
          facts({{"vertex_count", "32", "Fig. 7"},
                 {"regular_degree", "4", "Fig. 7"},
                 {"vertex_transitive", "true", "Fig. 7 caption"},
                 {"ramanujan", "true", "Fig. 7 caption"},
                 {"rigid", "false", "Fig. 7 caption"}})}},
        {"fig7_e",
         {fig7_e,
          facts({{"vertex_count", "36", "Fig. 7"},
                 {"regular_degree", "4", "Fig. 7"},
                 {"vertex_transitive", "true", "Fig. 7 caption"},
                 {"ramanujan", "true", "Fig. 7 caption"},
                 {"rigid", "false", "Fig. 7 caption"}})}},
        {"fig7_f",
         {fig7_f,
          facts({{"vertex_count", "40", "Fig. 7"},
                 {"regular_degree", "4", "Fig. 7"},
                 {"vertex_transitive", "true", "Fig. 7 caption"},
                 {"ramanujan", "true", "Fig. 7 caption"},
                 {"rigid", "false", "Fig. 7 caption"}})}},
        {"fig8_a",
         {build_fig8_a,
          facts({{"vertex_count", "12", "Fig. 8"},
                 {"regular_degree", "3", "Fig. 8"},
                 {"edge_connectivity", "1", "Fig. 8 caption"},
                 {"ramanujan", "true", "Fig. 8 caption"}})}},
        {"fig8_b",
         {build_fig8_b,
          facts({{"vertex_count", "12", "Fig. 8"},
                 {"regular_degree", "3", "Fig. 8"},
                 {"edge_connectivity", "1", "Fig. 8 caption"},
                 {"ramanujan", "true", "Fig. 8 caption"}})}},
        {"fig8_c",
         {build_fig8_c,
          facts({{"vertex_count", "12", "Fig. 8"},
                 {"regular_degree", "3", "Fig. 8"},
                 {"edge_connectivity", "1", "Fig. 8 caption"},
                 {"ramanujan", "true", "Fig. 8 caption"}})}},
        {"fig9_a",
         {fig9_a,
          facts({{"vertex_count", "20", "Fig. 9"},
                 {"regular_degree", "3", "Fig. 9"},
                 {"edge_connectivity", "2", "Fig. 9 caption"},
                 {"ramanujan", "true", "Fig. 9 caption"}})}},
        {"fig9_b",
         {fig9_b,
          facts({{"vertex_count", "20", "Fig. 9"},
                 {"regular_degree", "3", "Fig. 9"},
                 {"edge_connectivity", "2", "Fig. 9 caption"},
                 {"ramanujan", "true", "Fig. 9 caption"}})}},
    };
    return reg;
}

std::string fact_actual(const SimpleGraph& g, const std::string& property) {
    auto boolstr = [](bool b) { return b ? std::string("true") : std::string("false"); };
    if (property == "vertex_count") return std::to_string(g.vertex_count());
    if (property == "edge_count") return std::to_string(g.edge_count());
    if (property == "regular_degree") {
        auto k = regular_degree(g);
        return k ? std::to_string(*k) : std::string("none");
    }
    if (property == "connected") return boolstr(is_connected(g));
    if (property == "bipartite") return boolstr(is_bipartite(g));
    if (property == "vertex_transitive") return boolstr(is_vertex_transitive(g));
    if (property == "rigid") return boolstr(is_rigid_2d(g));
    if (property == "redundantly_rigid") return boolstr(is_redundantly_rigid_2d(g));
    if (property == "globally_rigid") return boolstr(is_globally_rigid_2d(g));
    if (property == "ramanujan") return boolstr(is_ramanujan(g).is_ramanujan);
    if (property == "edge_connectivity")
        return std::to_string(edge_connectivity(g).first);
    if (property == "vertex_connectivity")
        return std::to_string(vertex_connectivity(g).first);
    if (property == "tree_packing")
        return std::to_string(max_tree_packing(g).tree_count);
    if (property == "max_clique_at_most_3") return boolstr(max_clique_at_most(g, 3));
    if (property == "body_hinge_rigid_d2") return boolstr(body_hinge_rigid(g, 2));
    if (property == "body_hinge_rigid_d3") return boolstr(body_hinge_rigid(g, 3));
    if (property == "body_hinge_globally_rigid_d2")
        return boolstr(body_hinge_globally_rigid(g, 2));
    if (property == "redundantly_rigid_on_cylinder")
        return boolstr(redundantly_rigid_on_cylinder(g));
    if (property == "charpoly_divisible_by_x3_7x_2") {
        Poly p = characteristic_polynomial(adjacency_matrix(g));
        Poly q = {Rat(-2), Rat(-7), Rat(0), Rat(1)};  // x^3 - 7x - 2
        return boolstr(poly_divides(q, p));
    }
    if (property == "charpoly_shares_root_with_x2_x_8") {
        Poly p = characteristic_polynomial(adjacency_matrix(g));
        Poly q = {Rat(-8), Rat(-1), Rat(1)};  // x^2 - x - 8
        return boolstr(poly_degree(poly_gcd(p, q)) >= 1);
    }
    if (property == "contracts_to_K6_by_5cliques") {
        Multigraph h = clique_contract(g, 5);
        if (h.vertex_count() != 6) return "false";
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (h.multiplicity(u, v) != 1) return "false";
        return "true";
    }
    throw std::invalid_argument("unknown catalog fact property: " + property);
}

}  // namespace

CatalogEntry catalog_get(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("catalog_get: unknown name: " + name);
    CatalogEntry entry;
    entry.name = name;
    entry.graph = it->second.build();
    entry.asserted_facts = it->second.facts;
    return entry;
}

std::vector<std::string> verify_catalog_entry(const CatalogEntry& entry) {
    std::vector<std::string> failures;
    for (const auto& fact : entry.asserted_facts) {
        std::string actual = fact_actual(entry.graph, fact.property);
        if (actual != fact.expected) {
            std::ostringstream os;
            os << entry.name << ": " << fact.property << " expected " << fact.expected
               << " got " << actual << " (" << fact.source << ")";
            failures.push_back(os.str());
        }
    }
    return failures;
}

}  // namespace rigi
