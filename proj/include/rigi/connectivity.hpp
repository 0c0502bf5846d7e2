#pragma once

#include <utility>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

/// A verified witness for a connectivity value: removing the separator
/// disconnects `side` from the rest, and the separator size equals the
/// reported connectivity.
struct CutCertificate {
    enum class Kind { EdgeCut, VertexCut } kind = Kind::EdgeCut;
    std::vector<std::pair<int, int>> edge_separator;  // support pairs of the cut
    std::vector<int> vertex_separator;
    std::vector<int> side;  // one shore of the cut

    bool verify(const Multigraph& g, int reported) const;  // edge cuts
    bool verify(const SimpleGraph& g, int reported) const;  // vertex cuts
};

/// Max s-t flow with edge capacities equal to multiplicities.
int max_flow(const Multigraph& g, int s, int t);
int max_flow(const SimpleGraph& g, int s, int t);

/// Global minimum edge cut counting multiplicities (Stoer-Wagner on the
/// weighted support graph). Disconnected input yields 0 with an empty
/// separator and one component as the side.
std::pair<int, CutCertificate> edge_connectivity(const Multigraph& g);
std::pair<int, CutCertificate> edge_connectivity(const SimpleGraph& g);

/// Exact vertex connectivity via unit-capacity max-flow with vertex splitting
/// over the Even-Tarjan pair family; complete graphs return n-1 with an empty
/// certificate.
std::pair<int, CutCertificate> vertex_connectivity(const SimpleGraph& g);

/// Edge connectivity of G - S; at least two vertices must remain.
int edge_connectivity_after_deleting(const SimpleGraph& g, const std::vector<int>& s);

/// The mixed condition: G 6-edge-connected, G-u 4-edge-connected for every u,
/// and G-{v,w} 2-edge-connected for every pair. Sufficient for global rigidity
/// in the plane.
bool jj_mixed_condition(const SimpleGraph& g);

}  // namespace rigi
