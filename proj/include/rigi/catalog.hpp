#pragma once

#include <string>
#include <vector>

#include "rigi/graph.hpp"

namespace rigi {

/// One transcription-validation fact: a named property of the graph together
/// with its expected value. Evaluated by verify_catalog_entry.
struct AssertedFact {
    std::string property;
    std::string expected;
    std::string source;  // where the figure/caption states it
};

struct CatalogEntry {
    std::string name;
    SimpleGraph graph;
    std::vector<AssertedFact> asserted_facts;
};

const std::vector<std::string>& catalog_names();
CatalogEntry catalog_get(const std::string& name);

/// Re-evaluates every asserted fact; returns human-readable failure lines
/// (empty = all pass).
std::vector<std::string> verify_catalog_entry(const CatalogEntry& entry);

}  // namespace rigi
