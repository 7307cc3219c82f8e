#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spc/packing.hpp"

namespace spc {

struct CatalogFact {
    std::string graph;
    SSequence s;
    bool colorable = false;
    std::string provenance;
};

struct NamedGraph {
    std::string name;
    Graph graph;
    std::optional<int> saturation;
    std::optional<int> three_k;
    std::optional<int> g3;
    std::optional<bool> claw_free;
    std::string note;
};

const std::vector<NamedGraph>& catalog_all();
const NamedGraph& catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

/// Known colorability facts for the fixed graphs, checked by the exact solver.
const std::vector<CatalogFact>& all_facts();

/// Vertex map a -> b if the graphs are isomorphic (brute force; small graphs).
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

} // namespace spc
