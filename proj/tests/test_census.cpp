#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "rigi/census.hpp"
#include "rigi/graph.hpp"

using namespace rigi;

namespace {

// Brute-force canonical code: minimum adjacency bitstring over all n!
// relabelings. Usable up to n ~ 7; fully independent of the library path.
uint64_t brute_min_code(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t code = 0;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (g.has_edge(perm[u], perm[v])) code |= uint64_t(1) << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return brute_min_code(a) == brute_min_code(b);
}

SimpleGraph random_relabel(const SimpleGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

// Count isomorphism classes of k-regular graphs on n labeled vertices by raw
// enumeration of all 2^C(n,2) graphs (n <= 6) and brute-force dedup.
long labeled_brute_regular_count(int n, int k, bool connected) {
    std::set<uint64_t> classes;
    int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        std::vector<int> deg(n, 0);
        for (int b = 0; b < bits; ++b)
            if ((mask >> b) & 1) {
                deg[pairs[b].first]++;
                deg[pairs[b].second]++;
            }
        bool ok = true;
        for (int v = 0; v < n; ++v)
            if (deg[v] != k) ok = false;
        if (!ok) continue;
        std::vector<std::pair<int, int>> es;
        for (int b = 0; b < bits; ++b)
            if ((mask >> b) & 1) es.push_back(pairs[b]);
        SimpleGraph g = SimpleGraph::from_edges(n, es);
        if (connected && !is_connected(g)) continue;
        classes.insert(brute_min_code(g));
    }
    return static_cast<long>(classes.size());
}

}  // namespace

TEST_CASE("canonical form invariance and separation") {
    std::mt19937 rng(31);
    SimpleGraph c5 = cycle_graph(5);
    auto cf = canonical_form(c5);
    for (int i = 0; i < 20; ++i) CHECK(canonical_form(random_relabel(c5, rng)) == cf);

    // same degree sequence, different girth
    CHECK_FALSE(canonical_form(complete_bipartite(3, 3)) == canonical_form(prism(3)));
    CHECK(are_isomorphic(petersen_graph(), random_relabel(petersen_graph(), rng)));
    CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
    std::mt19937 rng(32);
    std::vector<SimpleGraph> pool;
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) es.emplace_back(u, v);
        pool.push_back(SimpleGraph::from_edges(n, es));
    }
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            bool brute = brute_isomorphic(pool[i], pool[j]);
            bool canon = are_isomorphic(pool[i], pool[j]);
            CHECK(brute == canon);
        }
}

TEST_CASE("canonical form handles very symmetric graphs quickly") {
    std::mt19937 rng(33);
    CHECK(canonical_form(complete_bipartite(7, 7)) ==
          canonical_form(random_relabel(complete_bipartite(7, 7), rng)));
    CHECK_FALSE(canonical_form(complete_graph(10)) == canonical_form(petersen_graph()));
}

namespace {
// full-orbit brute force over all n! permutations (n <= 8)
bool brute_vertex_transitive(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<bool> in_orbit(n, false);
    in_orbit[0] = true;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v : g.neighbors(u))
                if (u < v && !g.has_edge(perm[u], perm[v])) {
                    ok = false;
                    break;
                }
        if (ok) in_orbit[perm[0]] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int v = 0; v < n; ++v)
        if (!in_orbit[v]) return false;
    return true;
}
}  // namespace

TEST_CASE("vertex transitivity") {
    CHECK(is_vertex_transitive(petersen_graph()));
    CHECK_FALSE(is_vertex_transitive(path_graph(3)));
    CHECK(is_vertex_transitive(cycle_graph(9)));
    CHECK(is_vertex_transitive(complete_bipartite(4, 4)));
    CHECK_FALSE(is_vertex_transitive(complete_bipartite(3, 5)));
    CHECK(is_vertex_transitive(prism(4)));
    // transitive graphs are regular, so non-regular inputs are rejected fast
    CHECK_FALSE(is_vertex_transitive(complete_graph(4).without_edge(0, 1)));
}

TEST_CASE("vertex transitivity matches permutation brute force on cubic n=8") {
    for (const auto& g : enumerate_regular_list(8, 3, true, false))
        CHECK(is_vertex_transitive(g) == brute_vertex_transitive(g));
    for (const auto& g : enumerate_regular_list(6, 3, true, false))
        CHECK(is_vertex_transitive(g) == brute_vertex_transitive(g));
}

TEST_CASE("regular enumeration matches labeled brute force at n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k < n; ++k) {
            if ((n * k) % 2 != 0) continue;
            for (bool connected : {false, true}) {
                long expect = labeled_brute_regular_count(n, k, connected);
                long got = static_cast<long>(
                    enumerate_regular_list(n, k, connected, false).size());
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(connected);
                CHECK(expect == got);
            }
        }
    }
}

TEST_CASE("enumeration emits canonical distinct graphs") {
    auto list = enumerate_regular_list(8, 3, true, false);
    CHECK(list.size() == 5);  // connected cubic graphs on 8 vertices
    std::set<std::string> forms;
    for (const auto& g : list) {
        CHECK(regular_degree(g) == 3);
        forms.insert(canonical_form(g).graph6);
    }
    CHECK(forms.size() == list.size());

    // includes disconnected classes without the filter: K4 u K4
    auto all8 = enumerate_regular_list(8, 3, false, false);
    CHECK(all8.size() == 6);
}

TEST_CASE("known stratum sizes") {
    CHECK(enumerate_regular_list(10, 3, true, false).size() == 19);
    CHECK(enumerate_regular_list(7, 4, true, false).size() == 2);
    CHECK(enumerate_regular_list(8, 4, true, false).size() == 6);
    CHECK(enumerate_regular_list(10, 7, true, false).size() == 5);
}

TEST_CASE("bipartite enumeration") {
    auto b8 = enumerate_regular_list(8, 4, true, true);
    REQUIRE(b8.size() == 1);
    CHECK(are_isomorphic(b8[0], complete_bipartite(4, 4)));

    auto b10 = enumerate_regular_list(10, 4, true, true);
    CHECK(b10.size() == 1);  // complement of a perfect matching in K55

    auto b12k5 = enumerate_regular_list(12, 5, true, true);
    CHECK(b12k5.size() == 1);

    // cross-check small bipartite strata against the general enumerator
    for (int n = 4; n <= 10; n += 2) {
        for (int k = 1; k <= 4 && k < n / 2 + 1; ++k) {
            if ((n * k) % 2 != 0 || k > n / 2) continue;
            auto direct = enumerate_regular_list(n, k, true, true);
            long via_general = 0;
            enumerate_regular(n, k, true, false, [&](const SimpleGraph& g) {
                if (is_bipartite(g)) via_general++;
            });
            CAPTURE(n);
            CAPTURE(k);
            CHECK(static_cast<long>(direct.size()) == via_general);
        }
    }
}

TEST_CASE("enumeration guards and preconditions") {
    CHECK_THROWS_AS(enumerate_regular_list(16, 3, true, false), EnumerationGuardError);
    CHECK_THROWS_AS(enumerate_regular_list(12, 5, true, false), EnumerationGuardError);
    CHECK_THROWS_AS(enumerate_regular_list(7, 3, true, false), std::domain_error);  // parity
    CHECK_THROWS_AS(enumerate_regular_list(5, 5, true, false), std::domain_error);  // k >= n
}

TEST_CASE("vertex transitive cubic graphs on 8 vertices") {
    // the cube and the Moebius ladder V8
    long vt = 0;
    for (const auto& g : enumerate_regular_list(8, 3, true, false))
        if (is_vertex_transitive(g)) vt++;
    CHECK(vt == 2);
}

TEST_CASE("all-graph enumeration counts") {
    // classes on exactly n vertices, validated against labeled brute force
    auto count_brute = [](int n) {
        std::set<uint64_t> classes;
        int bits = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
            std::vector<std::pair<int, int>> es;
            for (int b = 0; b < bits; ++b)
                if ((mask >> b) & 1) es.push_back(pairs[b]);
            classes.insert(brute_min_code(SimpleGraph::from_edges(n, es)));
        }
        return static_cast<long>(classes.size());
    };
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(static_cast<long>(enumerate_all_graphs(n).size()) == count_brute(n));
    }
}

