#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>

#include "rigi/catalog.hpp"
#include "rigi/graph.hpp"
#include "rigi/report.hpp"

using namespace rigi;
using nlohmann::json;

namespace {

/// Minimal structural validator for the subset of JSON Schema the shipped
/// schema uses (required + type/const on properties, one level of nesting).
bool type_matches(const json& value, const json& type_spec) {
    auto one = [&](const std::string& t) {
        if (t == "integer") return value.is_number_integer();
        if (t == "number") return value.is_number();
        if (t == "boolean") return value.is_boolean();
        if (t == "string") return value.is_string();
        if (t == "array") return value.is_array();
        if (t == "object") return value.is_object();
        if (t == "null") return value.is_null();
        return false;
    };
    if (type_spec.is_string()) return one(type_spec.get<std::string>());
    for (const auto& t : type_spec)
        if (one(t.get<std::string>())) return true;
    return false;
}

void validate_against(const json& value, const json& schema, const std::string& where,
                      std::vector<std::string>& errors) {
    if (schema.contains("type") && !type_matches(value, schema["type"]))
        errors.push_back(where + ": wrong type");
    if (schema.contains("const") && value != schema["const"])
        errors.push_back(where + ": const mismatch");
    if (!value.is_object()) {
        if (value.is_array() && schema.contains("items"))
            for (size_t i = 0; i < value.size(); ++i)
                validate_against(value[i], schema["items"], where + "[" + std::to_string(i) + "]",
                                 errors);
        return;
    }
    if (schema.contains("required"))
        for (const auto& req : schema["required"])
            if (!value.contains(req.get<std::string>()))
                errors.push_back(where + ": missing " + req.get<std::string>());
    if (schema.contains("properties"))
        for (auto& [key, sub] : schema["properties"].items())
            if (value.contains(key)) validate_against(value[key], sub, where + "." + key, errors);
}

}  // namespace

TEST_CASE("reports validate against the shipped schema") {
    std::ifstream f("docs/report-schema.json");
    REQUIRE(f.good());
    json schema = json::parse(f);

    AnalyzeOptions options;
    options.with_bounds = true;
    options.with_cross_check = true;
    for (const auto& g :
         {complete_graph(4), petersen_graph(), path_graph(3), disjoint_union(cycle_graph(3), cycle_graph(4)),
          catalog_get("fig3_quartic_cut2_10").graph}) {
        PropertyReport r = analyze_graph(g, "t", options);
        json parsed = json::parse(report_to_json(r));
        std::vector<std::string> errors;
        validate_against(parsed, schema, "$", errors);
        for (const auto& e : errors) MESSAGE(e);
        CHECK(errors.empty());
    }
}

TEST_CASE("report internal consistency") {
    AnalyzeOptions options;
    for (const auto& name : {"fig1_special30", "fig3_cubic_bridge10", "fig5_a"}) {
        auto g = catalog_get(name).graph;
        PropertyReport r = analyze_graph(g, name, options);
        if (r.globally_rigid) CHECK(r.rigid);
        if (r.globally_rigid) CHECK(r.redundantly_rigid);
        if (r.tree_count && r.strength_value)
            CHECK(*r.strength_value >= Rat(*r.tree_count));
        if (r.ramanujan && *r.ramanujan) CHECK(r.connected);
        CHECK(parse_graph6(r.graph6) == g);
    }
}

TEST_CASE("analysis output is deterministic") {
    AnalyzeOptions options;
    options.with_bounds = true;
    auto g = catalog_get("fig2_ring3K4").graph;
    std::string a = report_to_json(analyze_graph(g, "x", options));
    std::string b = report_to_json(analyze_graph(g, "x", options));
    CHECK(a == b);
}

TEST_CASE("fixed verdicts through the report layer") {
    AnalyzeOptions options;
    auto k4 = analyze_graph(complete_graph(4), "k4", options);
    CHECK(k4.rigid);
    CHECK(k4.globally_rigid);
    auto fig1 = analyze_graph(catalog_get("fig1_special30").graph, "fig1", options);
    CHECK(fig1.rigid);
    CHECK_FALSE(fig1.globally_rigid);
    auto fig3 = analyze_graph(catalog_get("fig3_cubic_bridge10").graph, "fig3", options);
    REQUIRE(fig3.ramanujan.has_value());
    CHECK(*fig3.ramanujan);
    CHECK(fig3.edge_connectivity == 1);
    REQUIRE(fig3.body.size() == 2);
    CHECK_FALSE(*fig3.body[0].hinge_rigid);  // d=2
}
