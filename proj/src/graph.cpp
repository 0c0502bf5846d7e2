#include "rigi/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace rigi {

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("from_edges: vertex out of range");
        if (u == v) throw std::invalid_argument("from_edges: loop");
        if (g.has_edge(u, v)) throw std::invalid_argument("from_edges: parallel edge");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.m_++;
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("without_edge: no such edge");
    auto es = edges();
    es.erase(std::find(es.begin(), es.end(),
                       std::make_pair(std::min(u, v), std::max(u, v))));
    return from_edges(n_, es);
}

SimpleGraph SimpleGraph::without_vertices(const std::vector<int>& drop) const {
    std::vector<bool> dead(n_, false);
    for (int v : drop) dead.at(v) = true;
    std::vector<int> newid(n_, -1);
    int nn = 0;
    for (int v = 0; v < n_; ++v)
        if (!dead[v]) newid[v] = nn++;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges())
        if (!dead[u] && !dead[v]) es.emplace_back(newid[u], newid[v]);
    return from_edges(nn, es);
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges()) es.emplace_back(perm.at(u), perm.at(v));
    return from_edges(n_, es);
}

SimpleGraph SimpleGraph::complement() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) es.emplace_back(u, v);
    return from_edges(n_, es);
}

Multigraph Multigraph::from_simple(const SimpleGraph& g) {
    Multigraph h(g.vertex_count());
    for (auto [u, v] : g.edges()) h.set_multiplicity(u, v, 1);
    return h;
}

void Multigraph::set_multiplicity(int u, int v, int k) {
    if (u == v) throw std::invalid_argument("Multigraph: loop");
    if (k < 0) throw std::invalid_argument("Multigraph: negative multiplicity");
    mult_[u][v] = mult_[v][u] = k;
}

int Multigraph::degree(int v) const {
    return std::accumulate(mult_[v].begin(), mult_[v].end(), 0);
}

int Multigraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

int Multigraph::max_multiplicity() const {
    int best = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) best = std::max(best, mult_[u][v]);
    return best;
}

std::vector<Multigraph::Edge> Multigraph::edge_list() const {
    std::vector<Edge> out;
    int id = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            for (int c = 0; c < mult_[u][v]; ++c) out.push_back({u, v, id++});
    return out;
}

SimpleGraph Multigraph::support() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (mult_[u][v] > 0) es.emplace_back(u, v);
    return SimpleGraph::from_edges(n_, es);
}

Multigraph Multigraph::without_edge_copy(int u, int v) const {
    if (mult_[u][v] == 0) throw std::invalid_argument("without_edge_copy: no such edge");
    Multigraph h = *this;
    h.mult_[u][v]--;
    h.mult_[v][u]--;
    return h;
}

// ---- graph6 ----------------------------------------------------------------

SimpleGraph parse_graph6(const std::string& text) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > text.size())
            throw Graph6ParseError("graph6: truncated input", text.size());
    };
    auto next6 = [&]() -> int {
        need(1);
        unsigned char c = text[pos];
        if (c < 63 || c > 126)
            throw Graph6ParseError("graph6: byte outside 63..126", pos);
        ++pos;
        return c - 63;
    };

    need(1);
    long n;
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = next6();
    } else {
        ++pos;
        need(1);
        if (static_cast<unsigned char>(text[pos]) == 126)
            throw Graph6ParseError("graph6: order beyond supported range", pos);
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next6();
        if (n <= 62)
            throw Graph6ParseError("graph6: non-minimal size field", 0);
    }

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != nbytes)
        throw Graph6ParseError("graph6: body length mismatch", text.size());

    SimpleGraph g(static_cast<int>(n));
    std::vector<std::pair<int, int>> es;
    int have = 0, acc = 0;
    long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (have == 0) {
                acc = next6();
                have = 6;
            }
            if (acc & (1 << (have - 1))) es.emplace_back(row, col);
            --have;
        }
    }
    if (have > 0 && (acc & ((1 << have) - 1)) != 0)
        throw Graph6ParseError("graph6: nonzero padding bits", pos - 1);
    return SimpleGraph::from_edges(static_cast<int>(n), es);
}

std::string emit_graph6(const SimpleGraph& g) {
    long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int i = 2; i >= 0; --i)
            out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
    } else {
        throw std::invalid_argument("emit_graph6: order beyond supported range");
    }
    int acc = 0, have = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>(63 + (acc << (6 - have))));
    return out;
}

// ---- basic queries ----------------------------------------------------------

namespace {

std::vector<int> bfs_component(const std::vector<std::vector<int>>& adj, int start,
                               std::vector<int>& comp, int id) {
    std::vector<int> verts;
    std::queue<int> q;
    q.push(start);
    comp[start] = id;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        verts.push_back(u);
        for (int v : adj[u])
            if (comp[v] < 0) {
                comp[v] = id;
                q.push(v);
            }
    }
    return verts;
}

std::vector<std::vector<int>> adjacency_of(const SimpleGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

std::vector<std::vector<int>> adjacency_of(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (u != v && g.multiplicity(u, v) > 0) adj[u].push_back(v);
    return adj;
}

template <class G>
bool connected_impl(const G& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    auto adj = adjacency_of(g);
    std::vector<int> comp(n, -1);
    return static_cast<int>(bfs_component(adj, 0, comp, 0).size()) == n;
}

}  // namespace

bool is_connected(const SimpleGraph& g) { return connected_impl(g); }
bool is_connected(const Multigraph& g) { return connected_impl(g); }

std::optional<std::vector<int>> bipartition(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const SimpleGraph& g) { return bipartition(g).has_value(); }

std::vector<int> degree_sequence(const SimpleGraph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

std::optional<int> regular_degree(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int k = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

std::optional<int> regular_degree(const Multigraph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int k = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

int diameter(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::domain_error("diameter: empty graph");
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u))
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) throw std::domain_error("diameter: disconnected graph");
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    int n = g.vertex_count();
    auto adj = adjacency_of(g);
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v)
        if (comp[v] < 0)
            out.push_back(bfs_component(adj, v, comp, static_cast<int>(out.size())));
    return out;
}

// ---- constructions ----------------------------------------------------------

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return SimpleGraph::from_edges(n, es);
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return SimpleGraph::from_edges(n, es);
}

SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return SimpleGraph::from_edges(n, es);
}

SimpleGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return SimpleGraph::from_edges(a + b, es);
}

SimpleGraph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 5; ++v) {
        es.emplace_back(v, (v + 1) % 5);          // outer C5
        es.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        es.emplace_back(v, 5 + v);                // spokes
    }
    return SimpleGraph::from_edges(10, es);
}

SimpleGraph prism(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v) {
        es.emplace_back(v, (v + 1) % n);
        es.emplace_back(n + v, n + (v + 1) % n);
        es.emplace_back(v, n + v);
    }
    return SimpleGraph::from_edges(2 * n, es);
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    auto es = a.edges();
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) es.emplace_back(off + u, off + v);
    return SimpleGraph::from_edges(off + b.vertex_count(), es);
}

Multigraph scale(const Multigraph& g, int t) {
    if (t < 1) throw std::invalid_argument("scale: t must be positive");
    Multigraph h(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            h.set_multiplicity(u, v, g.multiplicity(u, v) * t);
    return h;
}

Multigraph scale(const SimpleGraph& g, int t) {
    return scale(Multigraph::from_simple(g), t);
}

Multigraph clique_contract(const SimpleGraph& g, int k) {
    int n = g.vertex_count();
    auto kreg = regular_degree(g);
    if (!kreg || *kreg != k)
        throw std::invalid_argument("clique_contract: graph is not k-regular");
    // A k-clique through v uses k-1 of v's k neighbors, so there are only k
    // candidate subsets to test per vertex.
    std::vector<int> clique_of(n, -1);
    std::vector<std::vector<int>> cliques;
    for (int v = 0; v < n; ++v) {
        if (clique_of[v] >= 0) continue;
        const auto& nb = g.neighbors(v);
        std::vector<std::vector<int>> found;
        for (int skip = 0; skip < k; ++skip) {
            std::vector<int> members{v};
            for (int i = 0; i < k; ++i)
                if (i != skip) members.push_back(nb[i]);
            bool ok = true;
            for (size_t i = 1; i + 1 < members.size() && ok; ++i)
                for (size_t j = i + 1; j < members.size(); ++j)
                    if (!g.has_edge(members[i], members[j])) {
                        ok = false;
                        break;
                    }
            if (ok) found.push_back(members);
        }
        if (found.empty())
            throw std::invalid_argument("clique_contract: vertex in no k-clique");
        if (found.size() > 1)
            throw std::invalid_argument("clique_contract: two k-cliques share a vertex");
        for (int u : found[0]) {
            if (clique_of[u] >= 0)
                throw std::invalid_argument("clique_contract: two k-cliques share a vertex");
            clique_of[u] = static_cast<int>(cliques.size());
        }
        cliques.push_back(found[0]);
    }
    Multigraph h(static_cast<int>(cliques.size()));
    for (auto [u, v] : g.edges()) {
        int cu = clique_of[u], cv = clique_of[v];
        if (cu != cv) h.set_multiplicity(cu, cv, h.multiplicity(cu, cv) + 1);
    }
    return h;
}

SimpleGraph clique_replace(const SimpleGraph& h, int k) {
    if (k < 3) throw std::invalid_argument("clique_replace: k < 3");
    auto kreg = regular_degree(h);
    if (!kreg || *kreg != k)
        throw std::invalid_argument("clique_replace: graph is not k-regular");
    int hn = h.vertex_count();
    std::vector<std::pair<int, int>> es;
    auto slot = [&](int x, int i) { return k * x + i; };
    for (int x = 0; x < hn; ++x)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) es.emplace_back(slot(x, i), slot(x, j));
    std::vector<int> used(hn, 0);  // next free slot per clique
    for (auto [x, y] : h.edges()) es.emplace_back(slot(x, used[x]++), slot(y, used[y]++));
    return SimpleGraph::from_edges(k * hn, es);
}

}  // namespace rigi
