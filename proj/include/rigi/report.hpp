#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigi/bounds.hpp"
#include "rigi/graph.hpp"
#include "rigi/numbers.hpp"

namespace rigi {

struct AnalyzeOptions {
    std::vector<int> body_dimensions = {2, 3};
    bool with_bounds = false;
    bool with_cross_check = false;
};

/// The full per-graph analysis record emitted by the CLI. Exact values are
/// kept exact (rationals as p/q strings in the serialization); floats appear
/// only in the clearly-named approx fields.
struct PropertyReport {
    std::string id;
    std::string graph6;

    int n = 0;
    std::optional<int> regular_k;
    int degree_min = 0;
    int degree_max = 0;
    bool connected = false;
    bool bipartite = false;
    std::optional<int> diameter;

    std::optional<bool> ramanujan;
    double approx_lambda2 = 0.0;
    double approx_mu2 = 0.0;

    int edge_connectivity = 0;
    std::optional<int> vertex_connectivity;
    std::optional<bool> jj_mixed;

    bool rigid = false;
    bool redundantly_rigid = false;
    bool globally_rigid = false;

    std::optional<int> tree_count;
    std::optional<Rat> strength_value;

    struct BodyVerdicts {
        int d = 0;
        std::optional<bool> bar_rigid;
        std::optional<bool> bar_globally_rigid;
        std::optional<bool> hinge_rigid;
        std::optional<bool> hinge_globally_rigid;
    };
    std::vector<BodyVerdicts> body;

    std::optional<bool> rigid_sphere;
    std::optional<bool> rigid_cylinder;
    std::optional<bool> rigid_general_revolution;
    std::optional<bool> redundantly_rigid_cylinder;
    std::optional<bool> globally_rigid_cylinder;

    std::vector<BoundVerdict> bound_verdicts;
    std::optional<std::vector<std::string>> cross_check_violations;
};

PropertyReport analyze_graph(const SimpleGraph& g, const std::string& id,
                             const AnalyzeOptions& options);

std::string report_to_json(const PropertyReport& report);  // one line, stable field order
std::string report_csv_header();
std::string report_to_csv(const PropertyReport& report);

}  // namespace rigi
