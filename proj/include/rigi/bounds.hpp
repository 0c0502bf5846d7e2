#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigi/graph.hpp"
#include "rigi/numbers.hpp"

namespace rigi {

/// A property guaranteed by a satisfied hypothesis, to be confirmed by the
/// exact modules during cross-checking.
struct ImpliedProperty {
    enum class Kind {
        Rigid2D,
        GloballyRigid2D,
        EdgeConnectivityAtLeast,
        VertexConnectivityAtLeast,
        PacksTrees,             // on the graph itself
        PacksTreesScaled,       // a = trees, b = scale factor t
        StrengthAtLeast,        // a/b
        BodyHingeRigid,         // a = d
        BodyHingeGloballyRigid, // a = d
        BodyBarRigidScaled,     // a = d, b = scale factor (1 = as-is)
        BodyBarGloballyRigidScaled,
        RigidOnCylinder,
        RigidOnGeneralRevolution,
        RedundantlyRigidOnCylinder,
        GloballyRigidOnCylinder,
        GloballyRigidOrListedException,  // the vertex-transitive lemma
        MuTwoAtMost,                     // consistency assertions (Nilli)
        DiameterAtLeast,                 // consistency assertions (Moore)
    };
    Kind kind;
    long a = 0;
    long b = 1;
    Quad bound;  // for MuTwoAtMost
};

struct BoundVerdict {
    std::string theorem_id;
    bool applicable = false;       // preconditions met
    bool hypothesis_holds = false; // exact decision of the spectral hypothesis
    std::vector<ImpliedProperty> implied;
    Quad threshold;
    std::string margin_note;
};

// ---- hypothesis checkers (each decides its threshold exactly) ----------------

/// Minimum degree >= 6 and mu2 > 2 + 1/(delta-1) implies rigid;
/// mu2 > 2 + 2/(delta-1) implies globally rigid.
BoundVerdict check_specrigid_rigidity(const SimpleGraph& g);
BoundVerdict check_specrigid_global(const SimpleGraph& g);

/// Ramanujan global rigidity: 7-regular with n >= 22, 6-regular with n >= 329,
/// or any Ramanujan graph of valency k >= 8.
BoundVerdict check_ramanujan_global_rigidity(const SimpleGraph& g);

/// delta >= 2k and mu2 > (2k-1)/(delta+1) gives k edge-disjoint spanning trees.
BoundVerdict check_tree_packing_lhgl(const SimpleGraph& g, int k);
/// Multigraph version: ell = max(ceil((delta+1)/m), 2), mu2 > (2k-1)/ell.
BoundVerdict check_tree_packing_multigraph(const Multigraph& g, int k);
/// Fractional version: delta >= 2s/t and mu2 > (2s-1)/(t(delta+1)) give
/// strength at least s/t.
BoundVerdict check_fractional_packing(const SimpleGraph& g, long s, long t);

/// k-regular spectral edge-connectivity conditions (both clauses) plus the
/// small-order remark n < 2k+2.
std::vector<BoundVerdict> check_edge_connectivity_bounds(const SimpleGraph& g, int ell);
/// lambda2 below (k-2+sqrt(k^2+12))/2 (k even) or (k-2+sqrt(k^2+8))/2 (odd)
/// forces 2-connectivity.
BoundVerdict check_two_connected(const SimpleGraph& g);
/// Connectivity guarantees for Ramanujan graphs (the four clauses).
std::vector<BoundVerdict> check_ramanujan_connectivity(const SimpleGraph& g);

/// k - 2 sqrt(k-1) + (2 sqrt(k-1) - 1)/floor(m/2), exactly in Q(sqrt(k-1)).
Quad nilli_upper_bound(int k, int diam);

/// Smallest diameter consistent with the Moore bound
/// n <= 1 + k sum_{i<m} (k-1)^i, strict for k outside {2,3,7,57} when m >= 2.
int moore_min_diameter(int k, long n);

/// Vertex-transitive spectral lemma for k in {4,5}: mu2 above the Nilli-derived
/// threshold forces global rigidity or membership in the listed exceptions.
BoundVerdict check_vtspec(const SimpleGraph& g);

/// Body-hinge spectral conditions (delta >= 3):
/// mu2 > (2 + 1/(D-1))/(delta+1) -> body-hinge rigid in R^d (d >= 2);
/// mu2 > (2 + 2/(D-1))/(delta+1) -> body-hinge globally rigid (d >= 3).
BoundVerdict check_body_hinge_spectral(const SimpleGraph& g, int d, bool global);

/// Surfaces of revolution: delta >= 4 and mu2 > 3/(delta+1) -> rigid on any
/// non-sphere surface of revolution; delta >= 5 and mu2 > 4/(delta+1) ->
/// redundantly rigid on the cylinder.
BoundVerdict check_surface_spectral(const SimpleGraph& g, bool redundant);

/// Cut-size lower bounds for a shore of size a against b = n - a - |T| in a
/// k-regular graph: the degree-count bound a(k-a+1) for small shores, the
/// spectral bound (k - tau) a b / n for a certified upper bound tau >= lambda2,
/// and feasibility of the Expander Mixing Lemma inequality
/// k a b / n <= 2 sqrt(k-1) sqrt(ab(1-a/n)(1-b/n)).
struct CutBounds {
    long degree_bound = 0;
    Quad spectral_bound;
    bool eml_disconnection_feasible = true;
};
CutBounds spectral_cut_lower_bound(int k, long n, long a, long b, const Quad& lambda2_upper);
CutBounds spectral_cut_lower_bound(const SimpleGraph& g, long a, long b,
                                   std::optional<Quad> lambda2_upper = std::nullopt);

/// Runs every applicable checker, confirms each satisfied hypothesis's implied
/// properties through the exact modules, and reports violations (must be
/// empty).
struct CrossCheckReport {
    std::vector<BoundVerdict> verdicts;
    std::vector<std::string> violations;
};
CrossCheckReport cross_check(const SimpleGraph& g);

}  // namespace rigi
