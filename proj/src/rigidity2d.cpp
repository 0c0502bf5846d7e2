#include "rigi/rigidity2d.hpp"

#include <algorithm>

#include "rigi/census.hpp"
#include "rigi/connectivity.hpp"

namespace rigi {

namespace {

/// Move one free pebble to `root` if the pebble game orientation allows it,
/// reversing the path used. Never harvests from `root` or `other`.
/// DFS explores out-neighbors in ascending vertex order.
bool gather_pebble(PebbleState& st, int root, int other) {
    int n = static_cast<int>(st.pebbles.size());
    std::vector<int> parent(n, -2);
    parent[root] = -1;
    parent[other] = -3;  // blocked
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!st.orientation[u][v] || parent[v] != -2) continue;
            parent[v] = u;
            if (st.pebbles[v] > 0) {
                // move the pebble to the root, reversing the path used
                st.pebbles[v]--;
                st.pebbles[root]++;
                int cur = v;
                while (parent[cur] >= 0) {
                    int p = parent[cur];
                    st.orientation[p][cur] = false;
                    st.orientation[cur][p] = true;
                    cur = p;
                }
                return true;
            }
            stack.push_back(v);
        }
    }
    return false;
}

}  // namespace

PebbleState pebble_game_2_3(const SimpleGraph& g) {
    int n = g.vertex_count();
    PebbleState st;
    st.pebbles.assign(n, 2);
    st.orientation.assign(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) {
        // an edge is independent iff l+1 = 4 pebbles gather on its endpoints
        while (st.pebbles[u] + st.pebbles[v] < 4) {
            if (!gather_pebble(st, u, v) && !gather_pebble(st, v, u)) break;
        }
        if (st.pebbles[u] + st.pebbles[v] < 4) continue;  // dependent edge
        // both endpoints hold a pebble here; charge the edge to u
        st.pebbles[u]--;
        st.orientation[u][v] = true;
        st.accepted.emplace_back(u, v);
    }
    st.rank = static_cast<int>(st.accepted.size());
    return st;
}

std::pair<int, std::vector<std::pair<int, int>>> rigidity_rank(const SimpleGraph& g) {
    if (g.vertex_count() < 2) throw std::domain_error("rigidity_rank: need n >= 2");
    PebbleState st = pebble_game_2_3(g);
    return {st.rank, st.accepted};
}

bool is_rigid_2d(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    return rigidity_rank(g).first == 2 * n - 3;
}

bool is_redundantly_rigid_2d(const SimpleGraph& g) {
    auto es = g.edges();
    if (!es.empty() && !is_rigid_2d(g)) return false;  // rank only drops
    for (auto [u, v] : es)
        if (!is_rigid_2d(g.without_edge(u, v))) return false;
    return true;
}

bool is_globally_rigid_2d(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n <= 3) return g.edge_count() == n * (n - 1) / 2;
    return vertex_connectivity(g).first >= 3 && is_redundantly_rigid_2d(g);
}

namespace {

bool has_clique_of_size(const SimpleGraph& g, int target, std::vector<int>& current,
                        const std::vector<int>& candidates) {
    if (static_cast<int>(current.size()) == target) return true;
    if (static_cast<int>(current.size() + candidates.size()) < target) return false;
    for (size_t i = 0; i < candidates.size(); ++i) {
        int v = candidates[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < candidates.size(); ++j)
            if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
        current.push_back(v);
        if (has_clique_of_size(g, target, current, next)) return true;
        current.pop_back();
    }
    return false;
}

}  // namespace

bool max_clique_at_most(const SimpleGraph& g, int c) {
    if (c < 0) throw std::invalid_argument("max_clique_at_most: negative bound");
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    std::vector<int> current;
    return !has_clique_of_size(g, c + 1, current, all);
}

bool vt_globally_rigid_characterization(const SimpleGraph& g) {
    if (!is_connected(g)) throw std::domain_error("vt characterization: disconnected graph");
    auto kreg = regular_degree(g);
    if (!kreg || *kreg < 2)
        throw std::domain_error("vt characterization: need k-regular with k >= 2");
    if (!is_vertex_transitive(g))
        throw std::domain_error("vt characterization: graph is not vertex-transitive");
    int k = *kreg, n = g.vertex_count();
    switch (k) {
        case 2: return n <= 3;
        case 3: return n <= 4;
        case 4: return max_clique_at_most(g, 3) || n <= 11;
        case 5: return max_clique_at_most(g, 4) || n <= 28;
        default: return true;  // k >= 6
    }
}

}  // namespace rigi
