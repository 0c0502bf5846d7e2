#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rigi/graph.hpp"
#include "rigi/numbers.hpp"

namespace rigi {

/// Independence oracles for the matroid-union engine. Elements are indices
/// into a shared endpoint list.
enum class MatroidKind { Graphic, Bicircular };

struct GroundSet {
    int n = 0;                                  // vertex count
    std::vector<std::pair<int, int>> elements;  // endpoints per element
};

/// Maximum partitionable set under a list of matroids over the ground set
/// (matroid union via shortest exchange paths). owner[e] is the matroid index
/// holding element e, or -1. spanned_by_failures is the union of the
/// exchange-reachable sets of all rejected elements against the final family;
/// it certifies maximality.
struct UnionResult {
    std::vector<int> owner;
    std::vector<std::vector<int>> parts;
    std::vector<char> spanned_by_failures;
    int rank = 0;
};

UnionResult matroid_union(const GroundSet& ground, const std::vector<MatroidKind>& matroids);

/// Rank of E(g) in the union of two single-graph matroids.
int matroid_union_rank(const Multigraph& g, MatroidKind a, MatroidKind b);

/// Maximal edge-disjoint spanning tree family with the Nash-Williams/Tutte
/// dual certificate: when tree_count+1 trees do not exist, deficiency_edges X
/// satisfies |X| < (tree_count+1) * (c(G-X) - 1).
struct PackingResult {
    int tree_count = 0;
    std::vector<std::vector<std::pair<int, int>>> forests;   // tree_count spanning trees
    std::optional<std::vector<std::pair<int, int>>> deficiency_edges;
    int deficiency_components = 0;  // c(G - X)
};

PackingResult max_tree_packing(const Multigraph& g);
PackingResult max_tree_packing(const SimpleGraph& g);

/// Does g contain k edge-disjoint spanning trees? (single decision run)
bool packs_spanning_trees(const Multigraph& g, int k);

/// G - e has k edge-disjoint spanning trees for every edge e, decided via
/// strength(g) > k.
bool packs_k_trees_minus_any_edge(const Multigraph& g, int k);

/// Exact strength eta(G) = min |X| / (c(G-X)-1) as a rational with denominator
/// at most n-1, found by Stern-Brocot search over the decision oracle
/// "t*G packs s trees", plus a vertex partition attaining the minimum.
struct StrengthValue {
    Rat value;
    std::vector<std::vector<int>> witness_partition;
};

StrengthValue strength(const Multigraph& g);
StrengthValue strength(const SimpleGraph& g);

/// Body-bar rigidity in R^d: d(d+1)/2 edge-disjoint spanning trees.
bool body_bar_rigid(const Multigraph& g, int d);
/// Body-bar global rigidity: G-e body-bar rigid for every edge copy e.
bool body_bar_globally_rigid(const Multigraph& g, int d);
/// Body-hinge rigidity in R^d (d >= 2): (D-1)G packs D trees, D = (d+1 choose 2).
bool body_hinge_rigid(const SimpleGraph& g, int d);
/// Body-hinge global rigidity: 3-edge-connectivity for d = 2; for d >= 3,
/// (D-1)G - e packs D trees for every e, i.e. strength((D-1)G) > D.
bool body_hinge_globally_rigid(const SimpleGraph& g, int d);

}  // namespace rigi
