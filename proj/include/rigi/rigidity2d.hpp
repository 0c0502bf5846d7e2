#pragma once

#include <utility>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

/// Final state of a (2,3)-pebble game run: every vertex starts with 2 pebbles,
/// each accepted edge consumes one and is directed away from the vertex it was
/// charged to. The accepted set is (2,3)-sparse and its size is the rank of
/// E(G) in the generic 2D rigidity matroid.
struct PebbleState {
    std::vector<int> pebbles;
    std::vector<std::vector<bool>> orientation;  // orientation[u][v]: accepted arc u->v
    std::vector<std::pair<int, int>> accepted;
    int rank = 0;
};

PebbleState pebble_game_2_3(const SimpleGraph& g);

/// Rank of E(G) in the generic 2D rigidity matroid plus a maximal independent
/// edge set realizing it.
std::pair<int, std::vector<std::pair<int, int>>> rigidity_rank(const SimpleGraph& g);

bool is_rigid_2d(const SimpleGraph& g);
bool is_redundantly_rigid_2d(const SimpleGraph& g);
bool is_globally_rigid_2d(const SimpleGraph& g);

/// Branch-and-bound clique bound; intended for small c (at most 5 here).
bool max_clique_at_most(const SimpleGraph& g, int c);

/// The exact five-case characterization of globally rigid connected
/// vertex-transitive graphs of degree k >= 2. Verifies vertex-transitivity and
/// throws std::domain_error when it fails.
bool vt_globally_rigid_characterization(const SimpleGraph& g);

}  // namespace rigi
