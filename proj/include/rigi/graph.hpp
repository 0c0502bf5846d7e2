#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rigi {

/// Labeled undirected simple graph on vertices 0..n-1. Immutable after
/// construction; all operations on it are pure.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(n) {
        if (n < 0) throw std::invalid_argument("SimpleGraph: negative order");
    }

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::vector<std::pair<int, int>> edges() const;

    SimpleGraph without_edge(int u, int v) const;
    SimpleGraph without_vertices(const std::vector<int>& drop) const;
    SimpleGraph relabeled(const std::vector<int>& perm) const;  // new label of v = perm[v]
    SimpleGraph complement() const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Undirected multigraph: symmetric nonnegative multiplicities, no loops.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n), mult_(n, std::vector<int>(n, 0)) {}
    static Multigraph from_simple(const SimpleGraph& g);

    int vertex_count() const { return n_; }
    int multiplicity(int u, int v) const { return mult_[u][v]; }
    void set_multiplicity(int u, int v, int k);
    int degree(int v) const;
    int edge_count() const;  // with multiplicity
    int max_multiplicity() const;

    /// One entry per parallel copy; ids are 0..edge_count()-1 in a fixed order
    /// so that "delete edge #i" is meaningful on scaled graphs.
    struct Edge {
        int u, v, id;
    };
    std::vector<Edge> edge_list() const;
    SimpleGraph support() const;
    Multigraph without_edge_copy(int u, int v) const;  // remove one parallel copy

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && mult_ == o.mult_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> mult_;
};

// ---- graph6 ----------------------------------------------------------------

struct Graph6ParseError : std::runtime_error {
    size_t byte_offset;
    Graph6ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

SimpleGraph parse_graph6(const std::string& text);
std::string emit_graph6(const SimpleGraph& g);

// ---- basic queries ----------------------------------------------------------

bool is_connected(const SimpleGraph& g);
bool is_connected(const Multigraph& g);
bool is_bipartite(const SimpleGraph& g);
std::optional<std::vector<int>> bipartition(const SimpleGraph& g);  // 0/1 sides
std::vector<int> degree_sequence(const SimpleGraph& g);             // sorted ascending
std::optional<int> regular_degree(const SimpleGraph& g);
std::optional<int> regular_degree(const Multigraph& g);
int diameter(const SimpleGraph& g);  // throws on disconnected input
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

// ---- constructions ----------------------------------------------------------

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph petersen_graph();
SimpleGraph prism(int n);  // C_n x K_2
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

Multigraph scale(const Multigraph& g, int t);
Multigraph scale(const SimpleGraph& g, int t);

/// Contract every k-clique of a k-regular graph where each vertex lies in
/// exactly one such clique; verifies that structure and returns the quotient
/// multigraph (one vertex per clique).
Multigraph clique_contract(const SimpleGraph& g, int k);

/// Replace every vertex of a k-regular graph by a K_k and share the k edges at
/// each vertex out evenly, one per clique vertex.
SimpleGraph clique_replace(const SimpleGraph& h, int k);

}  // namespace rigi
