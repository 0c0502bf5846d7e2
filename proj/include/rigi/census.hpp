#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

/// Canonical graph6 word: equal iff the graphs are isomorphic.
struct CanonicalForm {
    std::string graph6;
    bool operator==(const CanonicalForm& o) const { return graph6 == o.graph6; }
    bool operator<(const CanonicalForm& o) const { return graph6 < o.graph6; }
};

/// Iterated equitable refinement + individualization backtracking, selecting
/// the lexicographically minimal certificate over the leaves.
CanonicalForm canonical_form(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// Orbit test of the automorphism group: true iff vertex 0 reaches every
/// vertex. Guarded at n <= 64.
bool is_vertex_transitive(const SimpleGraph& g);

struct EnumerationGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exactly one representative per isomorphism class of k-regular graphs on n
/// vertices (orderly generation; emitted graphs are canonical by construction).
/// Desk-scale guards refuse large strata unless force is set.
void enumerate_regular(int n, int k, bool connected, bool bipartite,
                       const std::function<void(const SimpleGraph&)>& sink,
                       bool force = false);
std::vector<SimpleGraph> enumerate_regular_list(int n, int k, bool connected,
                                                bool bipartite, bool force = false);

/// Every isomorphism class on exactly n vertices (tiny-scale oracle helper;
/// guarded at n <= 9).
std::vector<SimpleGraph> enumerate_all_graphs(int n);

struct CensusFilters {
    bool connected = true;
    bool bipartite = false;
    bool vertex_transitive = false;
};

struct CensusRow {
    int n = 0;
    int k = 0;
    CensusFilters filters;
    long total = 0;           // graphs matching the filters
    long ramanujan = 0;       // thereof Ramanujan
    long rigid = 0;           // within the Ramanujan stratum
    long globally_rigid = 0;  // within the Ramanujan stratum
    long rigid_not_gr = 0;    // rigid - globally_rigid
    std::map<int, long> edge_connectivity_histogram;  // Ramanujan stratum
};

CensusRow census_table(int n, int k, CensusFilters filters, bool force = false,
                       const std::function<void(const SimpleGraph&)>& dump = nullptr);

/// All connected cubic Ramanujan graphs with edge connectivity 1 and at most
/// n_max vertices, up to isomorphism.
std::vector<SimpleGraph> cubic_low_connectivity_scan(int n_max, bool force = false);

}  // namespace rigi
