#include "rigi/packing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "rigi/connectivity.hpp"

namespace rigi {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

/// Bicircular matroid: independent iff every component has at most one cycle.
bool bicircular_independent(const GroundSet& gs, const std::vector<int>& set, int extra) {
    DisjointSet ds(gs.n);
    std::vector<int> extra_edges(gs.n, 0);  // surplus per component root
    auto add = [&](int e) {
        auto [u, v] = gs.elements[e];
        int ru = ds.find(u), rv = ds.find(v);
        if (ru == rv) {
            if (extra_edges[ru] >= 1) return false;
            extra_edges[ru]++;
            return true;
        }
        int surplus = extra_edges[ru] + extra_edges[rv];
        if (surplus >= 2) return false;
        ds.unite(ru, rv);
        extra_edges[ds.find(u)] = surplus;
        return true;
    };
    for (int e : set)
        if (!add(e)) return false;
    return add(extra);
}

/// Bicircular circuit: the component of set+extra carrying two cycles, with
/// leaves repeatedly trimmed (the remaining theta/barbell is the circuit).
std::vector<int> bicircular_circuit(const GroundSet& gs, const std::vector<int>& set,
                                    int extra) {
    std::vector<int> all = set;
    all.push_back(extra);
    DisjointSet ds(gs.n);
    for (int e : all) ds.unite(gs.elements[e].first, gs.elements[e].second);
    int root = ds.find(gs.elements[extra].first);
    std::vector<int> member;
    std::vector<int> deg(gs.n, 0);
    for (int e : all)
        if (ds.find(gs.elements[e].first) == root) {
            member.push_back(e);
            deg[gs.elements[e].first]++;
            deg[gs.elements[e].second]++;
        }
    // trim leaves until minimum degree 2
    std::vector<char> alive(member.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < member.size(); ++i) {
            if (!alive[i]) continue;
            auto [u, v] = gs.elements[member[i]];
            if (deg[u] == 1 || deg[v] == 1) {
                alive[i] = 0;
                deg[u]--;
                deg[v]--;
                changed = true;
            }
        }
    }
    std::vector<int> circuit;
    for (size_t i = 0; i < member.size(); ++i)
        if (alive[i]) circuit.push_back(member[i]);
    return circuit;
}

struct UnionEngine {
    const GroundSet& gs;
    const std::vector<MatroidKind>& kinds;
    int k;
    std::vector<std::vector<int>> parts;
    std::vector<int> owner;

    // per-augment caches for graphic parts: rooted forests for O(path) circuits
    struct ForestCache {
        std::vector<int> parent_vertex;  // BFS tree parent, -1 at roots
        std::vector<int> parent_elem;    // element to the parent
        std::vector<int> depth;
        std::vector<int> comp;
    };
    std::vector<ForestCache> caches;

    UnionEngine(const GroundSet& g, const std::vector<MatroidKind>& m)
        : gs(g), kinds(m), k(static_cast<int>(m.size())), parts(m.size()),
          owner(g.elements.size(), -1) {}

    void rebuild_cache(int j) {
        ForestCache& fc = caches[j];
        int n = gs.n;
        fc.parent_vertex.assign(n, -1);
        fc.parent_elem.assign(n, -1);
        fc.depth.assign(n, 0);
        fc.comp.assign(n, -1);
        std::vector<std::vector<std::pair<int, int>>> adj(n);
        for (int e : parts[j]) {
            auto [u, v] = gs.elements[e];
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }
        for (int root = 0; root < n; ++root) {
            if (fc.comp[root] >= 0) continue;
            fc.comp[root] = root;
            std::deque<int> q{root};
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (auto [v, e] : adj[u])
                    if (fc.comp[v] < 0) {
                        fc.comp[v] = root;
                        fc.parent_vertex[v] = u;
                        fc.parent_elem[v] = e;
                        fc.depth[v] = fc.depth[u] + 1;
                        q.push_back(v);
                    }
            }
        }
    }

    bool cached_graphic_independent(int j, int x) const {
        auto [u, v] = gs.elements[x];
        return caches[j].comp[u] != caches[j].comp[v];
    }

    std::vector<int> cached_graphic_circuit(int j, int x) const {
        const ForestCache& fc = caches[j];
        auto [u, v] = gs.elements[x];
        std::vector<int> circuit{x};
        while (u != v) {
            if (fc.depth[u] < fc.depth[v]) std::swap(u, v);
            circuit.push_back(fc.parent_elem[u]);
            u = fc.parent_vertex[u];
        }
        return circuit;
    }

    /// BFS over exchange arcs from `start`. If an augmenting element is found,
    /// applies the exchanges and returns true; otherwise fills `reached`.
    bool augment(int start, std::vector<char>* reached_out) {
        int m = static_cast<int>(gs.elements.size());
        caches.assign(k, {});
        for (int j = 0; j < k; ++j)
            if (kinds[j] == MatroidKind::Graphic) rebuild_cache(j);
        std::vector<int> prev(m, -2);  // -2 unvisited, -1 BFS root
        std::deque<int> queue{start};
        prev[start] = -1;
        auto apply_path = [&](int last, int into) {
            // walk back: last enters `into`, each predecessor replaces its successor
            int cur = last;
            int dest = into;
            while (cur != -1) {
                int p = prev[cur];
                if (owner[cur] >= 0) {
                    auto& part = parts[owner[cur]];
                    part.erase(std::find(part.begin(), part.end(), cur));
                }
                int previous_owner = owner[cur];
                parts[dest].push_back(cur);
                owner[cur] = dest;
                dest = previous_owner;
                cur = p;
            }
        };
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int j = 0; j < k; ++j) {
                if (owner[x] == j) continue;
                bool graphic = kinds[j] == MatroidKind::Graphic;
                bool indep = graphic ? cached_graphic_independent(j, x)
                                     : bicircular_independent(gs, parts[j], x);
                if (indep) {
                    apply_path(x, j);
                    return true;
                }
                std::vector<int> circuit = graphic
                                               ? cached_graphic_circuit(j, x)
                                               : bicircular_circuit(gs, parts[j], x);
                for (int y : circuit) {
                    if (y == x || prev[y] != -2) continue;
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (reached_out) {
            reached_out->assign(m, 0);
            for (int e = 0; e < m; ++e)
                if (prev[e] != -2) (*reached_out)[e] = 1;
        }
        return false;
    }
};

}  // namespace

UnionResult matroid_union(const GroundSet& ground, const std::vector<MatroidKind>& matroids) {
    UnionEngine engine(ground, matroids);
    int m = static_cast<int>(ground.elements.size());
    std::vector<int> rejected;
    for (int e = 0; e < m; ++e)
        if (!engine.augment(e, nullptr)) rejected.push_back(e);

    UnionResult result;
    result.spanned_by_failures.assign(m, 0);
    for (int e : rejected) {
        std::vector<char> reached;
        bool ok = engine.augment(e, &reached);
        if (ok) throw std::logic_error("matroid_union: rejected element became insertable");
        for (int i = 0; i < m; ++i)
            if (reached[i]) result.spanned_by_failures[i] = 1;
    }
    result.owner = engine.owner;
    result.parts = engine.parts;
    for (const auto& p : engine.parts) result.rank += static_cast<int>(p.size());
    return result;
}

namespace {

GroundSet ground_of(const Multigraph& g) {
    GroundSet gs;
    gs.n = g.vertex_count();
    for (const auto& e : g.edge_list()) gs.elements.emplace_back(e.u, e.v);
    return gs;
}

}  // namespace

int matroid_union_rank(const Multigraph& g, MatroidKind a, MatroidKind b) {
    return matroid_union(ground_of(g), {a, b}).rank;
}

bool packs_spanning_trees(const Multigraph& g, int k) {
    if (g.vertex_count() < 2) throw std::domain_error("packs_spanning_trees: need n >= 2");
    if (k == 0) return true;
    GroundSet gs = ground_of(g);
    int m = static_cast<int>(gs.elements.size());
    long target = static_cast<long>(k) * (g.vertex_count() - 1);
    if (m < target) return false;
    std::vector<MatroidKind> kinds(k, MatroidKind::Graphic);
    UnionEngine engine(gs, kinds);
    long placed = 0;
    for (int e = 0; e < m; ++e) {
        if (engine.augment(e, nullptr)) ++placed;
        if (placed + (m - 1 - e) < target) return false;  // cannot reach the target
        if (placed == target) return true;
    }
    return placed == target;
}

PackingResult max_tree_packing(const Multigraph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("max_tree_packing: need n >= 2");
    PackingResult result;
    if (!is_connected(g)) {
        result.deficiency_edges = std::vector<std::pair<int, int>>{};
        result.deficiency_components = static_cast<int>(connected_components(g.support()).size());
        return result;
    }
    GroundSet gs = ground_of(g);
    int k = 1;
    UnionResult prev;
    while (true) {
        std::vector<MatroidKind> kinds(k, MatroidKind::Graphic);
        UnionResult r = matroid_union(gs, kinds);
        if (r.rank == k * (n - 1)) {
            prev = std::move(r);
            ++k;
            continue;
        }
        // k trees impossible: deficiency X = E minus the failure-spanned set T
        result.tree_count = k - 1;
        std::vector<std::pair<int, int>> x_edges;
        DisjointSet ds(n);
        for (size_t e = 0; e < gs.elements.size(); ++e) {
            if (r.spanned_by_failures[e])
                ds.unite(gs.elements[e].first, gs.elements[e].second);
            else
                x_edges.push_back(gs.elements[e]);
        }
        std::vector<char> seen_root(n, 0);
        int comps = 0;
        for (int v = 0; v < n; ++v)
            if (!seen_root[ds.find(v)]) {
                seen_root[ds.find(v)] = 1;
                comps++;
            }
        result.deficiency_edges = std::move(x_edges);
        result.deficiency_components = comps;
        break;
    }
    GroundSet elems = ground_of(g);
    for (const auto& part : prev.parts) {
        std::vector<std::pair<int, int>> tree;
        for (int e : part) tree.push_back(elems.elements[e]);
        result.forests.push_back(std::move(tree));
    }
    return result;
}

PackingResult max_tree_packing(const SimpleGraph& g) {
    return max_tree_packing(Multigraph::from_simple(g));
}

StrengthValue strength(const Multigraph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("strength: need n >= 2");
    if (!is_connected(g)) throw std::domain_error("strength: disconnected graph");

    // factor out the multiplicity content first: eta(tG) = t eta(G), and the
    // minimizing partition is unchanged
    long content = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            content = mpz_class(gcd(mpz_class(content), mpz_class(g.multiplicity(u, v)))).get_si();
    if (content > 1) {
        Multigraph reduced(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                reduced.set_multiplicity(u, v, g.multiplicity(u, v) / static_cast<int>(content));
        StrengthValue sv = strength(reduced);
        sv.value *= content;
        return sv;
    }

    auto decide = [&](long s, long t) {  // eta >= s/t iff tG packs s trees
        return packs_spanning_trees(scale(g, static_cast<int>(t)), static_cast<int>(s));
    };
    auto partition_of = [&](long s, long t) {
        // the failing run's deficiency set, mapped to a vertex partition
        Multigraph tg = scale(g, static_cast<int>(t));
        GroundSet gs = ground_of(tg);
        std::vector<MatroidKind> kinds(s, MatroidKind::Graphic);
        UnionResult r = matroid_union(gs, kinds);
        DisjointSet ds(n);
        for (size_t e = 0; e < gs.elements.size(); ++e)
            if (r.spanned_by_failures[e])
                ds.unite(gs.elements[e].first, gs.elements[e].second);
        std::vector<std::vector<int>> parts(n);
        for (int v = 0; v < n; ++v) parts[ds.find(v)].push_back(v);
        std::vector<std::vector<int>> out;
        for (auto& p : parts)
            if (!p.empty()) out.push_back(std::move(p));
        return out;
    };

    int base = max_tree_packing(g).tree_count;  // floor(eta)
    long lo_num = base, lo_den = 1;
    long hi_num = base + 1, hi_den = 1;
    std::vector<std::vector<int>> witness = partition_of(base + 1, 1);
    while (lo_den + hi_den <= n - 1) {
        long med_num = lo_num + hi_num, med_den = lo_den + hi_den;
        if (decide(med_num, med_den)) {
            lo_num = med_num;
            lo_den = med_den;
        } else {
            witness = partition_of(med_num, med_den);
            hi_num = med_num;
            hi_den = med_den;
        }
    }
    StrengthValue sv;
    sv.value = make_rat(lo_num, lo_den);
    sv.witness_partition = std::move(witness);
    return sv;
}

StrengthValue strength(const SimpleGraph& g) {
    return strength(Multigraph::from_simple(g));
}

bool packs_k_trees_minus_any_edge(const Multigraph& g, int k) {
    if (g.vertex_count() < 2)
        throw std::domain_error("packs_k_trees_minus_any_edge: need n >= 2");
    if (!is_connected(g)) return false;
    return strength(g).value > k;
}

bool body_bar_rigid(const Multigraph& g, int d) {
    if (d < 1) throw std::domain_error("body_bar_rigid: need d >= 1");
    int need = d * (d + 1) / 2;
    if (g.max_multiplicity() >= need)
        throw std::domain_error("body_bar_rigid: multiplicity must stay below d(d+1)/2");
    if (g.vertex_count() <= 1) return true;  // a single body
    if (!is_connected(g)) return false;
    return packs_spanning_trees(g, need);
}

bool body_bar_globally_rigid(const Multigraph& g, int d) {
    if (d < 1) throw std::domain_error("body_bar_globally_rigid: need d >= 1");
    int need = d * (d + 1) / 2;
    if (g.max_multiplicity() >= need)
        throw std::domain_error("body_bar_globally_rigid: multiplicity must stay below d(d+1)/2");
    if (g.vertex_count() <= 1) return true;
    if (!is_connected(g)) return false;
    // per-edge deletion; parallel copies of a pair are interchangeable
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.multiplicity(u, v) == 0) continue;
            Multigraph h = g.without_edge_copy(u, v);
            if (!is_connected(h) || !packs_spanning_trees(h, need)) return false;
        }
    return true;
}

bool body_hinge_rigid(const SimpleGraph& g, int d) {
    if (d < 2) throw std::domain_error("body_hinge_rigid: need d >= 2");
    int big = (d + 1) * d / 2;
    if (g.vertex_count() <= 1) return true;
    if (!is_connected(g)) return false;
    return packs_spanning_trees(scale(g, big - 1), big);
}

bool body_hinge_globally_rigid(const SimpleGraph& g, int d) {
    if (d < 2) throw std::domain_error("body_hinge_globally_rigid: need d >= 2");
    if (g.vertex_count() <= 1) return true;
    if (!is_connected(g)) return false;
    if (d == 2) return edge_connectivity(g).first >= 3;
    int big = (d + 1) * d / 2;
    return strength(scale(g, big - 1)).value > big;
}

}  // namespace rigi
