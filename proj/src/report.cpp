#include "rigi/report.hpp"

#include <json.hpp>

#include <sstream>

#include "rigi/connectivity.hpp"
#include "rigi/packing.hpp"
#include "rigi/rigidity2d.hpp"
#include "rigi/spectral.hpp"
#include "rigi/surfaces.hpp"

namespace rigi {

using ordered_json = nlohmann::ordered_json;

PropertyReport analyze_graph(const SimpleGraph& g, const std::string& id,
                             const AnalyzeOptions& options) {
    PropertyReport r;
    r.id = id;
    r.graph6 = emit_graph6(g);
    r.n = g.vertex_count();
    r.regular_k = regular_degree(g);
    if (r.n > 0) {
        r.degree_min = r.degree_max = g.degree(0);
        for (int v = 1; v < r.n; ++v) {
            r.degree_min = std::min(r.degree_min, g.degree(v));
            r.degree_max = std::max(r.degree_max, g.degree(v));
        }
    }
    r.connected = is_connected(g);
    r.bipartite = is_bipartite(g);
    if (r.connected && r.n > 0) r.diameter = diameter(g);

    auto spectrum = approx_spectrum(g);
    if (r.n >= 2) r.approx_lambda2 = spectrum.approx_adjacency_eigenvalues[r.n - 2];
    r.approx_mu2 = spectrum.approx_mu2;
    if (r.regular_k && *r.regular_k >= 3 && r.connected)
        r.ramanujan = is_ramanujan(g).is_ramanujan;

    r.edge_connectivity = r.n >= 2 ? edge_connectivity(g).first : 0;
    if (r.n >= 2) r.vertex_connectivity = vertex_connectivity(g).first;
    if (r.n >= 4) r.jj_mixed = jj_mixed_condition(g);

    r.rigid = is_rigid_2d(g);
    r.redundantly_rigid = is_redundantly_rigid_2d(g);
    r.globally_rigid = is_globally_rigid_2d(g);

    if (r.connected && r.n >= 2) {
        Multigraph m = Multigraph::from_simple(g);
        r.tree_count = max_tree_packing(m).tree_count;
        r.strength_value = strength(m).value;
        for (int d : options.body_dimensions) {
            PropertyReport::BodyVerdicts bv;
            bv.d = d;
            if (d >= 2) {  // multiplicity 1 < d(d+1)/2 only holds from d = 2 on
                bv.bar_rigid = body_bar_rigid(m, d);
                bv.bar_globally_rigid = body_bar_globally_rigid(m, d);
                bv.hinge_rigid = body_hinge_rigid(g, d);
                bv.hinge_globally_rigid = body_hinge_globally_rigid(g, d);
            }
            r.body.push_back(bv);
        }
        r.rigid_sphere = rigid_on_surface(g, SurfaceKind::Sphere);
        r.rigid_cylinder = rigid_on_surface(g, SurfaceKind::Cylinder);
        r.rigid_general_revolution = rigid_on_surface(g, SurfaceKind::GeneralRevolution);
        r.redundantly_rigid_cylinder = redundantly_rigid_on_cylinder(g);
        r.globally_rigid_cylinder = globally_rigid_on_cylinder(g);
    }

    if (options.with_bounds || options.with_cross_check) {
        auto report = cross_check(g);
        if (options.with_bounds) r.bound_verdicts = report.verdicts;
        if (options.with_cross_check) r.cross_check_violations = report.violations;
    }
    return r;
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

ordered_json quad_json(const Quad& q) {
    return ordered_json{{"a", rat_str(q.a)}, {"b", rat_str(q.b)}, {"m", q.m}};
}

ordered_json opt_bool(const std::optional<bool>& v) {
    if (!v) return nullptr;
    return *v;
}

ordered_json verdict_json(const BoundVerdict& v) {
    ordered_json j;
    j["theorem"] = v.theorem_id;
    j["applicable"] = v.applicable;
    j["hypothesis_holds"] = v.hypothesis_holds;
    j["threshold"] = quad_json(v.threshold);
    j["margin_note"] = v.margin_note;
    return j;
}

}  // namespace

std::string report_to_json(const PropertyReport& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["id"] = r.id;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["k"] = r.regular_k ? ordered_json(*r.regular_k) : ordered_json(nullptr);
    j["degree_min"] = r.degree_min;
    j["degree_max"] = r.degree_max;
    j["connected"] = r.connected;
    j["bipartite"] = r.bipartite;
    j["diameter"] = r.diameter ? ordered_json(*r.diameter) : ordered_json(nullptr);
    j["ramanujan"] = opt_bool(r.ramanujan);
    j["approx_lambda2"] = r.approx_lambda2;
    j["approx_mu2"] = r.approx_mu2;
    j["edge_connectivity"] = r.edge_connectivity;
    j["vertex_connectivity"] =
        r.vertex_connectivity ? ordered_json(*r.vertex_connectivity) : ordered_json(nullptr);
    j["jj_mixed"] = opt_bool(r.jj_mixed);
    j["rigid"] = r.rigid;
    j["redundantly_rigid"] = r.redundantly_rigid;
    j["globally_rigid"] = r.globally_rigid;
    j["tree_count"] = r.tree_count ? ordered_json(*r.tree_count) : ordered_json(nullptr);
    j["strength"] =
        r.strength_value ? ordered_json(rat_str(*r.strength_value)) : ordered_json(nullptr);
    ordered_json body = ordered_json::array();
    for (const auto& bv : r.body) {
        ordered_json b;
        b["d"] = bv.d;
        b["body_bar_rigid"] = opt_bool(bv.bar_rigid);
        b["body_bar_globally_rigid"] = opt_bool(bv.bar_globally_rigid);
        b["body_hinge_rigid"] = opt_bool(bv.hinge_rigid);
        b["body_hinge_globally_rigid"] = opt_bool(bv.hinge_globally_rigid);
        body.push_back(b);
    }
    j["body"] = body;
    ordered_json surf;
    surf["sphere_rigid"] = opt_bool(r.rigid_sphere);
    surf["cylinder_rigid"] = opt_bool(r.rigid_cylinder);
    surf["general_revolution_rigid"] = opt_bool(r.rigid_general_revolution);
    surf["cylinder_redundantly_rigid"] = opt_bool(r.redundantly_rigid_cylinder);
    surf["cylinder_globally_rigid"] = opt_bool(r.globally_rigid_cylinder);
    j["surfaces"] = surf;
    if (!r.bound_verdicts.empty()) {
        ordered_json bounds = ordered_json::array();
        for (const auto& v : r.bound_verdicts) bounds.push_back(verdict_json(v));
        j["bounds"] = bounds;
    }
    if (r.cross_check_violations)
        j["cross_check_violations"] = *r.cross_check_violations;
    return j.dump();
}

std::string report_csv_header() {
    return "id,graph6,n,k,degree_min,degree_max,connected,bipartite,diameter,ramanujan,"
           "approx_lambda2,approx_mu2,edge_connectivity,vertex_connectivity,jj_mixed,"
           "rigid,redundantly_rigid,globally_rigid,tree_count,strength,"
           "sphere_rigid,cylinder_rigid,general_revolution_rigid,"
           "cylinder_redundantly_rigid,cylinder_globally_rigid";
}

std::string report_to_csv(const PropertyReport& r) {
    auto b = [](const std::optional<bool>& v) {
        return !v ? std::string() : (*v ? std::string("1") : std::string("0"));
    };
    auto i = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    std::ostringstream os;
    os << r.id << ',' << r.graph6 << ',' << r.n << ',' << i(r.regular_k) << ','
       << r.degree_min << ',' << r.degree_max << ',' << (r.connected ? 1 : 0) << ','
       << (r.bipartite ? 1 : 0) << ',' << i(r.diameter) << ',' << b(r.ramanujan) << ','
       << r.approx_lambda2 << ',' << r.approx_mu2 << ',' << r.edge_connectivity << ','
       << i(r.vertex_connectivity) << ',' << b(r.jj_mixed) << ',' << (r.rigid ? 1 : 0)
       << ',' << (r.redundantly_rigid ? 1 : 0) << ',' << (r.globally_rigid ? 1 : 0) << ','
       << i(r.tree_count) << ','
       << (r.strength_value ? rat_str(*r.strength_value) : std::string()) << ','
       << b(r.rigid_sphere) << ',' << b(r.rigid_cylinder) << ','
       << b(r.rigid_general_revolution) << ',' << b(r.redundantly_rigid_cylinder) << ','
       << b(r.globally_rigid_cylinder);
    return os.str();
}

}  // namespace rigi
