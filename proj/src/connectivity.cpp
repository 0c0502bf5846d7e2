#include "rigi/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace rigi {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Tiny BFS-augmenting max-flow network (capacities are small everywhere here).
struct FlowNet {
    struct Arc {
        int to, cap, flow;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit FlowNet(int n) : out(n) {}

    void add_arc(int u, int v, int cap) {
        out[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap, 0});
        out[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0, 0});
    }

    int residual(int a) const { return arcs[a].cap - arcs[a].flow; }

    int augment(int s, int t) {
        std::vector<int> prev_arc(out.size(), -1);
        std::queue<int> q;
        q.push(s);
        std::vector<bool> seen(out.size(), false);
        seen[s] = true;
        while (!q.empty() && !seen[t]) {
            int u = q.front();
            q.pop();
            for (int a : out[u]) {
                if (residual(a) <= 0 || seen[arcs[a].to]) continue;
                seen[arcs[a].to] = true;
                prev_arc[arcs[a].to] = a;
                q.push(arcs[a].to);
            }
        }
        if (!seen[t]) return 0;
        int push = kInf;
        for (int v = t; v != s; v = arcs[prev_arc[v] ^ 1].to)
            push = std::min(push, residual(prev_arc[v]));
        for (int v = t; v != s; v = arcs[prev_arc[v] ^ 1].to) {
            arcs[prev_arc[v]].flow += push;
            arcs[prev_arc[v] ^ 1].flow -= push;
        }
        return push;
    }

    int max_flow(int s, int t) {
        int total = 0, got;
        while ((got = augment(s, t)) > 0) total += got;
        return total;
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(out.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : out[u])
                if (residual(a) > 0 && !seen[arcs[a].to]) {
                    seen[arcs[a].to] = true;
                    q.push(arcs[a].to);
                }
        }
        return seen;
    }
};

}  // namespace

bool CutCertificate::verify(const Multigraph& g, int reported) const {
    if (kind != Kind::EdgeCut) return false;
    int weight = 0;
    Multigraph h = g;
    for (auto [u, v] : edge_separator) {
        weight += g.multiplicity(u, v);
        h.set_multiplicity(u, v, 0);
    }
    if (weight != reported) return false;
    if (reported == 0) {
        // certificate of disconnection: the side itself must be a component
        if (side.empty() || static_cast<int>(side.size()) == g.vertex_count()) return false;
    }
    std::vector<bool> in_side(g.vertex_count(), false);
    for (int v : side) in_side[v] = true;
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = u + 1; v < h.vertex_count(); ++v)
            if (h.multiplicity(u, v) > 0 && in_side[u] != in_side[v]) return false;
    return !side.empty() && static_cast<int>(side.size()) < g.vertex_count();
}

bool CutCertificate::verify(const SimpleGraph& g, int reported) const {
    if (kind != Kind::VertexCut) return false;
    if (static_cast<int>(vertex_separator.size()) != reported) return false;
    if (reported == g.vertex_count() - 1) return true;  // complete-graph convention
    SimpleGraph h = g.without_vertices(vertex_separator);
    return !is_connected(h) || h.vertex_count() <= 1;
}

int max_flow(const Multigraph& g, int s, int t) {
    FlowNet net(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.multiplicity(u, v) > 0) {
                net.add_arc(u, v, g.multiplicity(u, v));
                net.add_arc(v, u, g.multiplicity(u, v));
            }
    return net.max_flow(s, t);
}

int max_flow(const SimpleGraph& g, int s, int t) {
    return max_flow(Multigraph::from_simple(g), s, t);
}

std::pair<int, CutCertificate> edge_connectivity(const Multigraph& g) {
    int n = g.vertex_count();
    CutCertificate cert;
    cert.kind = CutCertificate::Kind::EdgeCut;
    if (n < 2) throw std::domain_error("edge_connectivity: need n >= 2");
    if (!is_connected(g)) {
        std::vector<bool> seen(n, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (g.multiplicity(u, v) > 0 && !seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        for (int v = 0; v < n; ++v)
            if (seen[v]) cert.side.push_back(v);
        return {0, cert};
    }

    // Stoer-Wagner minimum cut phases on the weighted support graph.
    std::vector<std::vector<long>> w(n, std::vector<long>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) w[u][v] = g.multiplicity(u, v);
    std::vector<std::vector<int>> merged(n);
    for (int v = 0; v < n; ++v) merged[v] = {v};
    std::vector<int> active(n);
    for (int v = 0; v < n; ++v) active[v] = v;

    long best = -1;
    std::vector<int> best_side;
    while (active.size() > 1) {
        // maximum adjacency order
        std::vector<long> key(n, 0);
        std::vector<bool> in(n, false);
        int prev = -1, last = -1;
        long cut_of_phase = 0;
        for (size_t step = 0; step < active.size(); ++step) {
            int pick = -1;
            for (int v : active)
                if (!in[v] && (pick < 0 || key[v] > key[pick])) pick = v;
            in[pick] = true;
            prev = last;
            last = pick;
            cut_of_phase = key[pick];
            for (int v : active)
                if (!in[v]) key[v] += w[pick][v];
        }
        if (best < 0 || cut_of_phase < best) {
            best = cut_of_phase;
            best_side = merged[last];
        }
        // merge last into prev
        for (int v : active) {
            if (v == prev || v == last) continue;
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        merged[prev].insert(merged[prev].end(), merged[last].begin(), merged[last].end());
        active.erase(std::find(active.begin(), active.end(), last));
    }

    cert.side = best_side;
    std::sort(cert.side.begin(), cert.side.end());
    std::vector<bool> in_side(n, false);
    for (int v : cert.side) in_side[v] = true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.multiplicity(u, v) > 0 && in_side[u] != in_side[v])
                cert.edge_separator.emplace_back(u, v);
    return {static_cast<int>(best), cert};
}

std::pair<int, CutCertificate> edge_connectivity(const SimpleGraph& g) {
    return edge_connectivity(Multigraph::from_simple(g));
}

std::pair<int, CutCertificate> vertex_connectivity(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("vertex_connectivity: need n >= 2");
    CutCertificate cert;
    cert.kind = CutCertificate::Kind::VertexCut;

    int m_complete = n * (n - 1) / 2;
    if (g.edge_count() == m_complete) return {n - 1, cert};

    // split network: v_in = 2v, v_out = 2v+1
    auto flow_between = [&](int s, int t, CutCertificate* out_cert) {
        FlowNet net(2 * n);
        for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, v == s || v == t ? kInf : 1);
        for (auto [u, v] : g.edges()) {
            net.add_arc(2 * u + 1, 2 * v, kInf);
            net.add_arc(2 * v + 1, 2 * u, kInf);
        }
        int f = net.max_flow(2 * s + 1, 2 * t);
        if (out_cert) {
            auto seen = net.residual_reachable(2 * s + 1);
            out_cert->kind = CutCertificate::Kind::VertexCut;
            out_cert->vertex_separator.clear();
            out_cert->side.clear();
            for (int v = 0; v < n; ++v) {
                if (seen[2 * v] && !seen[2 * v + 1]) out_cert->vertex_separator.push_back(v);
                if (seen[2 * v + 1]) out_cert->side.push_back(v);
            }
        }
        return f;
    };

    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;

    int best = n - 1;
    std::vector<int> sources = {v0};
    for (int u : g.neighbors(v0)) sources.push_back(u);
    for (int s : sources) {
        for (int t = 0; t < n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            CutCertificate tmp;
            int f = flow_between(s, t, &tmp);
            if (f < best) {
                best = f;
                cert = tmp;
            }
        }
    }
    return {best, cert};
}

int edge_connectivity_after_deleting(const SimpleGraph& g, const std::vector<int>& s) {
    if (g.vertex_count() - static_cast<int>(s.size()) < 2)
        throw std::domain_error("edge_connectivity_after_deleting: fewer than 2 vertices left");
    return edge_connectivity(g.without_vertices(s)).first;
}

bool jj_mixed_condition(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n < 4) throw std::domain_error("jj_mixed_condition: need n >= 4");
    if (edge_connectivity(g).first < 6) return false;
    for (int u = 0; u < n; ++u)
        if (edge_connectivity_after_deleting(g, {u}) < 4) return false;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (edge_connectivity_after_deleting(g, {v, w}) < 2) return false;
    return true;
}

}  // namespace rigi
