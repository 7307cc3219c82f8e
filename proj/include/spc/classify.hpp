#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spc/graph.hpp"

namespace spc {

/// Structural parameters of a subcubic graph. Conventions:
///   saturation  = max over 3-vertices of #degree-3 neighbors, 0 without 3-vertices
///   three_k     = max over heavy vertices of #heavy neighbors, 0 without heavy vertices
///   g3          = max local girth over 3-vertices, 0 without 3-vertices,
///                 kInfDist when some 3-vertex lies on no cycle
struct ClassProfile {
    int max_degree = 0;
    int min_degree = 0;
    int saturation = 0;
    int three_k = 0;
    std::vector<int> girth_profile;
    int g3 = 0;
    bool had_three_vertex = false;
    bool claw_free = true;
    std::optional<std::array<int, 4>> diamond;
    std::vector<int> heavy;
    std::vector<int> rich;
};

ClassProfile classify(const Graph& g);

/// Diamond = 4-cycle x1 x2 x3 x4 plus the chord x1x3 (as a subgraph).
std::optional<std::array<int, 4>> find_diamond(const Graph& g);

struct ClassConstraint {
    std::optional<int> saturation_max;
    std::optional<int> three_k_max;
    std::optional<int> g3_max;
    std::optional<int> g3_equals;
    std::optional<int> max_degree_max;
    bool require_claw_free = false;
};

/// Graphs without any 3-vertex (g3 == 0) satisfy every g3 bound vacuously.
bool in_class(const ClassProfile& profile, const ClassConstraint& spec);
bool in_class(const Graph& g, const ClassConstraint& spec);

/// Comma-separated tokens: "sat<=K", "3k<=K", "g3=K", "g3<=K", "maxdeg<=K", "clawfree".
ClassConstraint parse_constraint(const std::string& text);
std::string to_string(const ClassConstraint& spec);

} // namespace spc
