#include "rigi/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "rigi/connectivity.hpp"
#include "rigi/rigidity2d.hpp"
#include "rigi/spectral.hpp"

namespace rigi {

// ---- equitable refinement ----------------------------------------------------

namespace {

/// One round of color splitting by (color, multiset of neighbor colors),
/// iterated to a fixed point. Color ids are assigned in a deterministic order
/// so refinement commutes with nothing but itself.
std::vector<int> refine_colors(const SimpleGraph& g, std::vector<int> color) {
    int n = g.vertex_count();
    while (true) {
        int ncolors = *std::max_element(color.begin(), color.end()) + 1;
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> counts(ncolors, 0);
            for (int u : g.neighbors(v)) counts[color[u]]++;
            sig[v] = std::move(counts);
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (color[a] != color[b]) return color[a] < color[b];
            return sig[a] < sig[b];
        });
        std::vector<int> next(n, 0);
        int cid = 0;
        for (int i = 1; i <= n - 1; ++i) {
            int a = order[i - 1], b = order[i];
            if (color[a] != color[b] || sig[a] != sig[b]) ++cid;
            next[b] = cid;
        }
        if (n > 0) next[order[0]] = 0;
        // renumbering above assigned ids in sorted order already
        bool changed = false;
        for (int v = 0; v < n; ++v)
            if (next[v] != color[v]) changed = true;
        if (!changed) return color;
        color = std::move(next);
    }
}

std::vector<std::vector<int>> cells_of(const std::vector<int>& color) {
    int ncolors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> cells(ncolors);
    for (size_t v = 0; v < color.size(); ++v) cells[color[v]].push_back(static_cast<int>(v));
    return cells;
}

std::vector<int> individualize(const std::vector<int>& color, int v) {
    // v gets a fresh color just below its old cell; refinement renumbers
    std::vector<int> next = color;
    for (size_t u = 0; u < next.size(); ++u)
        if (next[u] >= color[v]) next[u] += 1;
    next[v] = color[v];
    return next;
}

struct CanonSearch {
    const SimpleGraph& g;
    int n;
    std::string best;                // smallest certificate so far
    std::vector<int> best_leaf_perm; // vertex -> label at best leaf
    std::vector<std::vector<int>> automorphisms;
    std::vector<int> prefix;
    std::vector<std::vector<int>> tried_stack;  // branch vertices tried per level
    int unwind_to = -1;  // when >= 0, pop stack frames down to this depth

    explicit CanonSearch(const SimpleGraph& graph)
        : g(graph), n(graph.vertex_count()) {}

    std::string certificate(const std::vector<int>& perm) {
        return emit_graph6(g.relabeled(perm));
    }

    /// leaf_perm and best_leaf_perm produce identical relabelings, so
    /// best_leaf_perm^{-1} o leaf_perm is an automorphism.
    std::vector<int> automorphism_from(const std::vector<int>& leaf_perm) const {
        std::vector<int> inv_best(n);
        for (int v = 0; v < n; ++v) inv_best[best_leaf_perm[v]] = v;
        std::vector<int> a(n);
        for (int v = 0; v < n; ++v) a[v] = inv_best[leaf_perm[v]];
        return a;
    }

    /// Union-find orbits of the subgroup generated by recorded automorphisms
    /// fixing the current prefix pointwise.
    std::vector<int> prefix_orbits() {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : automorphisms) {
            bool fixes = true;
            for (int p : prefix)
                if (a[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int ra = find(v), rb = find(a[v]);
                if (ra != rb) parent[ra] = rb;
            }
        }
        for (int v = 0; v < n; ++v) parent[v] = find(v);
        return parent;
    }

    void dfs(std::vector<int> color, int depth) {
        color = refine_colors(g, std::move(color));
        auto cells = cells_of(color);
        const std::vector<int>* target = nullptr;
        for (const auto& c : cells)
            if (c.size() > 1 && (!target || c.size() < target->size())) target = &c;
        if (!target) {
            // discrete: color is the leaf permutation
            std::string cert = certificate(color);
            if (best.empty() || cert < best) {
                best = cert;
                best_leaf_perm = color;
            } else if (cert == best) {
                std::vector<int> a = automorphism_from(color);
                bool identity = true;
                for (int v = 0; v < n; ++v)
                    if (a[v] != v) identity = false;
                if (!identity) {
                    // If a fixes the path down to level d and maps the level-d
                    // branch vertex onto an already-finished sibling, this
                    // subtree mirrors explored territory from level d on.
                    int d = 0;
                    while (d < depth && a[prefix[d]] == prefix[d]) ++d;
                    if (d < depth) {
                        int mapped = a[prefix[d]];
                        for (int u : tried_stack[d])
                            if (u == mapped && u != prefix[d]) {
                                unwind_to = d;
                                break;
                            }
                    }
                    automorphisms.push_back(std::move(a));
                }
            }
            return;
        }
        tried_stack.emplace_back();
        for (int v : *target) {
            auto orbits = prefix_orbits();
            bool skip = false;
            for (int u : tried_stack[depth])
                if (orbits[u] == orbits[v]) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried_stack[depth].push_back(v);
            prefix.push_back(v);
            dfs(individualize(color, v), depth + 1);
            prefix.pop_back();
            if (unwind_to >= 0) {
                if (unwind_to < depth) break;  // keep popping
                unwind_to = -1;                // we are the divergence level
            }
        }
        tried_stack.pop_back();
    }
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return {emit_graph6(g)};
    CanonSearch search(g);
    search.dfs(std::vector<int>(g.vertex_count(), 0), 0);
    return {search.best};
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

// ---- vertex transitivity -------------------------------------------------------

namespace {

/// Backtracking search for an automorphism with image[0] == target.
/// Vertices are mapped in BFS order from 0 so every new vertex has a mapped
/// neighbor constraining its image.
struct AutoSearch {
    const SimpleGraph& g;
    int n;
    std::vector<int> order;  // BFS order from vertex 0
    std::vector<int> image, used;

    explicit AutoSearch(const SimpleGraph& graph) : g(graph), n(graph.vertex_count()) {
        std::vector<bool> seen(n, false);
        order.push_back(0);
        seen[0] = true;
        for (size_t i = 0; i < order.size(); ++i)
            for (int u : g.neighbors(order[i]))
                if (!seen[u]) {
                    seen[u] = true;
                    order.push_back(u);
                }
        for (int v = 0; v < n; ++v)
            if (!seen[v]) order.push_back(v);  // other components, if any
    }

    bool feasible(int v, int w) {
        // w as image of v must agree with every already-mapped vertex
        for (int u = 0; u < n; ++u) {
            if (image[u] < 0 || u == v) continue;
            if (g.has_edge(u, v) != g.has_edge(image[u], w)) return false;
        }
        return true;
    }

    bool extend(size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        if (image[v] >= 0) return extend(idx + 1);
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v) || !feasible(v, w)) continue;
            image[v] = w;
            used[w] = 1;
            if (extend(idx + 1)) return true;
            image[v] = -1;
            used[w] = 0;
        }
        return false;
    }

    bool find_mapping_zero_to(int target, std::vector<int>& out) {
        image.assign(n, -1);
        used.assign(n, 0);
        if (g.degree(target) != g.degree(0)) return false;
        image[0] = target;
        used[target] = 1;
        if (!extend(0)) return false;
        out = image;
        return true;
    }
};

}  // namespace

bool is_vertex_transitive(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 64) throw EnumerationGuardError("is_vertex_transitive: guarded at n <= 64");
    if (n <= 1) return true;
    if (!regular_degree(g)) return false;

    // orbit closure of vertex 0 under discovered automorphisms
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    AutoSearch search(g);
    for (int v = 1; v < n; ++v) {
        if (find(v) == find(0)) continue;
        std::vector<int> a;
        if (!search.find_mapping_zero_to(v, a)) return false;
        for (int u = 0; u < n; ++u) {
            int ra = find(u), rb = find(a[u]);
            if (ra != rb) parent[ra] = rb;
        }
    }
    return true;
}

// ---- orderly generation of regular graphs -------------------------------------

namespace {

/// Column-by-column generator: vertex t picks its back-neighbors as a bitmask.
/// A partial block survives only if no vertex sequence inside the block beats
/// its column-major code (lex-max canonicity); at the last column the test is
/// exact, so every emitted graph is the unique canonical representative of its
/// isomorphism class.
struct RegularGen {
    int n, k;
    const std::function<void(const SimpleGraph&)>& sink;
    std::vector<uint32_t> adj;  // adjacency bitmasks over all placed vertices
    std::vector<int> deg;

    RegularGen(int n_, int k_, const std::function<void(const SimpleGraph&)>& s)
        : n(n_), k(k_), sink(s), adj(n_, 0), deg(n_, 0) {}

    bool edge(int i, int j) const { return (adj[i] >> j) & 1; }

    /// Does some injective sequence w beat columns 0..t of the block (0..t)?
    /// Walks candidates depth-first; "equal" paths continue, the first strict
    /// win prunes, strict losses backtrack.
    bool beaten(int t) const {
        std::vector<int> w;
        return beat_dfs(t, w);
    }

    bool beat_dfs(int t, std::vector<int>& w) const {
        int depth = static_cast<int>(w.size());
        if (depth == t + 1) return false;  // full equal path = block automorphism
        for (int cand = 0; cand <= t; ++cand) {
            bool cused = false;
            for (int x : w)
                if (x == cand) {
                    cused = true;
                    break;
                }
            if (cused) continue;
            // compare column `depth` of the image against the block's column
            int cmp = 0;  // 0 equal, +1 image wins, -1 image loses
            for (int i = 0; i < depth; ++i) {
                bool image_bit = edge(w[i], cand);
                bool real_bit = edge(i, depth);
                if (image_bit != real_bit) {
                    cmp = image_bit ? +1 : -1;
                    break;
                }
            }
            if (cmp > 0) return true;
            if (cmp < 0) continue;
            w.push_back(cand);
            if (beat_dfs(t, w)) return true;
            w.pop_back();
        }
        return false;
    }

    void emit() {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(u, v)) es.emplace_back(u, v);
        sink(SimpleGraph::from_edges(n, es));
    }

    bool feasible_after(int t) const {
        // every placed vertex must be completable by the n-1-t later ones
        long need = 0;
        for (int v = 0; v <= t; ++v) {
            int d = k - deg[v];
            if (d < 0 || d > n - 1 - t) return false;
            need += d;
        }
        long future = static_cast<long>(n - 1 - t) * k;
        if (need > future || (future - need) % 2 != 0) return false;
        if (need > static_cast<long>(n - 1 - t) * std::min(k, t + 1)) return false;
        return true;
    }

    void place(int t) {
        if (t == n) {
            emit();
            return;
        }
        // choose back-neighbors of t among 0..t-1
        std::vector<int> open;
        for (int v = 0; v < t; ++v)
            if (deg[v] < k) open.push_back(v);
        int want_max = std::min<int>(k, static_cast<int>(open.size()));
        for (int take = want_max; take >= 0; --take) {
            if (k - take > n - 1 - t) continue;  // t itself must finish
            // iterate all `take`-subsets of open
            std::vector<int> pick(take);
            subset_rec(t, open, pick, 0, 0, take);
        }
    }

    void subset_rec(int t, const std::vector<int>& open, std::vector<int>& pick,
                    size_t from, int got, int take) {
        if (got == take) {
            apply_and_recurse(t, pick);
            return;
        }
        for (size_t i = from; i + (take - got) <= open.size(); ++i) {
            pick[got] = open[i];
            subset_rec(t, open, pick, i + 1, got + 1, take);
        }
    }

    void apply_and_recurse(int t, const std::vector<int>& pick) {
        for (int v : pick) {
            adj[t] |= 1u << v;
            adj[v] |= 1u << t;
            deg[v]++;
        }
        deg[t] = static_cast<int>(pick.size());
        if (feasible_after(t) && !beaten(t)) place(t + 1);
        for (int v : pick) {
            adj[t] &= ~(1u << v);
            adj[v] &= ~(1u << t);
            deg[v]--;
        }
        deg[t] = 0;
    }

    void run() {
        if (n == 0) return;
        if (n == 1) {
            if (k == 0) emit();
            return;
        }
        place(1);  // column of vertex 0 is empty; generation starts at vertex 1
    }
};

void enumerate_bipartite_regular(int n, int k,
                                 const std::function<void(const SimpleGraph&)>& raw_sink) {
    if (n % 2 != 0) return;  // k-regular bipartite forces equal sides
    int h = n / 2;
    if (k > h) return;
    if (k == 0) {
        if (n == 0) raw_sink(SimpleGraph(0));
        return;
    }
    // biadjacency rows with fixed first row and lexicographically non-increasing
    // rows; isomorph rejection afterwards by canonical form
    std::set<std::string> seen;
    std::vector<uint32_t> rows(h, 0);
    std::vector<int> colsum(h, 0);
    // treat column 0 as the most significant bit so integer order = string order
    auto rowkey = [&](uint32_t mask) {
        uint32_t key = 0;
        for (int c = 0; c < h; ++c)
            if ((mask >> c) & 1) key |= 1u << (h - 1 - c);
        return key;
    };
    std::function<void(int)> rec = [&](int r) {
        if (r == h) {
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < h; ++i)
                for (int c = 0; c < h; ++c)
                    if ((rows[i] >> c) & 1) es.emplace_back(i, h + c);
            SimpleGraph g = SimpleGraph::from_edges(n, es);
            auto cf = canonical_form(g);
            if (seen.insert(cf.graph6).second) raw_sink(parse_graph6(cf.graph6));
            return;
        }
        // enumerate row masks of weight k, lex <= previous row, column-feasible
        std::vector<int> pick;
        std::function<void(int, int)> build = [&](int from, int got) {
            if (got == k) {
                uint32_t mask = 0;
                for (int c : pick) mask |= 1u << c;
                if (r > 0 && rowkey(mask) > rowkey(rows[r - 1])) return;
                for (int c : pick)
                    if (colsum[c] + 1 > k) return;
                // remaining rows must be able to finish every column
                for (int c = 0; c < h; ++c) {
                    int have = colsum[c] + (((mask >> c) & 1) ? 1 : 0);
                    if (k - have > h - 1 - r) return;
                }
                rows[r] = mask;
                for (int c : pick) colsum[c]++;
                rec(r + 1);
                for (int c : pick) colsum[c]--;
                rows[r] = 0;
                return;
            }
            for (int c = from; c + (k - got) <= h; ++c) {
                pick.push_back(c);
                build(c + 1, got + 1);
                pick.pop_back();
            }
        };
        build(0, 0);
    };
    // first row = columns 0..k-1
    rows[0] = (1u << k) - 1;
    for (int c = 0; c < k; ++c) colsum[c] = 1;
    rec(1);
}

void check_guard(int n, int k, bool bipartite, bool force) {
    if (force) return;
    int limit;
    if (bipartite)
        limit = 14;
    else if (k <= 3)
        limit = 14;
    else if (k == 4)
        limit = 12;
    else
        limit = 10;
    if (n > limit)
        throw EnumerationGuardError("enumerate_regular: stratum beyond desk-scale guard (n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) +
                                    "); pass force to override");
}

}  // namespace

void enumerate_regular(int n, int k, bool connected, bool bipartite,
                       const std::function<void(const SimpleGraph&)>& sink, bool force) {
    if (n < 0 || k < 0 || k >= std::max(n, 1))
        throw std::domain_error("enumerate_regular: need 0 <= k < n");
    if ((static_cast<long>(n) * k) % 2 != 0)
        throw std::domain_error("enumerate_regular: nk must be even");
    check_guard(n, k, bipartite, force);

    std::function<void(const SimpleGraph&)> filtered = [&](const SimpleGraph& g) {
        if (connected && !is_connected(g)) return;
        if (bipartite && !is_bipartite(g)) return;
        sink(g);
    };
    if (bipartite) {
        enumerate_bipartite_regular(n, k, filtered);
    } else {
        RegularGen gen(n, k, filtered);
        gen.run();
    }
}

std::vector<SimpleGraph> enumerate_regular_list(int n, int k, bool connected, bool bipartite,
                                                bool force) {
    std::vector<SimpleGraph> out;
    enumerate_regular(n, k, connected, bipartite,
                      [&](const SimpleGraph& g) { out.push_back(g); }, force);
    return out;
}

std::vector<SimpleGraph> enumerate_all_graphs(int n) {
    if (n < 0 || n > 9)
        throw EnumerationGuardError("enumerate_all_graphs: guarded at n <= 9");
    std::vector<SimpleGraph> level = {SimpleGraph(1)};
    if (n == 0) return {SimpleGraph(0)};
    for (int t = 2; t <= n; ++t) {
        std::set<std::string> seen;
        std::vector<SimpleGraph> next;
        for (const auto& g : level) {
            for (uint32_t mask = 0; mask < (1u << (t - 1)); ++mask) {
                auto es = g.edges();
                for (int v = 0; v < t - 1; ++v)
                    if ((mask >> v) & 1) es.emplace_back(v, t - 1);
                SimpleGraph h = SimpleGraph::from_edges(t, es);
                auto cf = canonical_form(h);
                if (seen.insert(cf.graph6).second) next.push_back(parse_graph6(cf.graph6));
            }
        }
        level = std::move(next);
    }
    return level;
}

// ---- tables ---------------------------------------------------------------------

CensusRow census_table(int n, int k, CensusFilters filters, bool force,
                       const std::function<void(const SimpleGraph&)>& dump) {
    CensusRow row;
    row.n = n;
    row.k = k;
    row.filters = filters;
    // The vertex-transitive stratum counts disconnected graphs too, with
    // "Ramanujan" read as the eigenvalue bound on the non-trivial spectrum
    // (the published census convention).
    bool connected = filters.vertex_transitive ? false : filters.connected;
    enumerate_regular(
        n, k, connected, filters.bipartite,
        [&](const SimpleGraph& g) {
            if (filters.vertex_transitive && !is_vertex_transitive(g)) return;
            row.total++;
            if (dump) dump(g);
            if (k < 3) return;
            bool ram = filters.vertex_transitive
                           ? ramanujan_eigenvalue_condition(g)
                           : (is_connected(g) && is_ramanujan(g).is_ramanujan);
            if (!ram) return;
            row.ramanujan++;
            bool rigid = is_rigid_2d(g);
            bool gr = rigid && is_globally_rigid_2d(g);
            if (rigid) row.rigid++;
            if (gr) row.globally_rigid++;
            if (is_connected(g))
                row.edge_connectivity_histogram[edge_connectivity(g).first]++;
            else
                row.edge_connectivity_histogram[0]++;
        },
        force);
    row.rigid_not_gr = row.rigid - row.globally_rigid;
    return row;
}

std::vector<SimpleGraph> cubic_low_connectivity_scan(int n_max, bool force) {
    if (!force && n_max > 14)
        throw EnumerationGuardError("cubic_low_connectivity_scan: guarded at n <= 14");
    std::vector<SimpleGraph> out;
    for (int n = 4; n <= n_max; n += 2) {
        enumerate_regular(
            n, 3, /*connected=*/true, /*bipartite=*/false,
            [&](const SimpleGraph& g) {
                if (edge_connectivity(g).first != 1) return;
                if (!is_ramanujan(g).is_ramanujan) return;
                out.push_back(g);
            },
            force);
    }
    return out;
}

}  // namespace rigi
