#pragma once

#include "spc/packing.hpp"

namespace spc {

/// Closed-form colorings for paths and cycles. Class indices refer to the
/// scheme's own sequence, see scheme_sequence().
enum class LinearKind {
    l11k,                 // (1,1,k)
    l122,                 // (1,2,2), C5 excluded
    l2222,                // (2,2,2,2), C5 excluded
    l1245k,               // (1,2,4,5,k), k >= 6
    path122_ends1,        // paths, (1,2,2), both ends in class 1
    path2222_equal_ends,  // paths, (2,2,2,2), ends share a class unused inside
};

struct LinearScheme {
    LinearKind kind = LinearKind::l122;
    int k = 0;
};

SSequence scheme_sequence(const LinearScheme& scheme);

/// Coloring of the standard cycle 0-1-...-(n-1)-0.
PackingColoring color_cycle(int n, const LinearScheme& scheme);

/// Path v_0..v_{n-1} under (1,2,2) with both ends in class 1. n >= 3.
PackingColoring color_path_ends1(int n);

/// Path under (2,2,2,2), ends share class 1 and no interior vertex uses it. n >= 4.
PackingColoring color_path_equal_ends(int n);

/// Colors a graph with max degree <= 2 component by component.
PackingColoring color_delta2(const Graph& g, const LinearScheme& scheme);

/// Vertices of a path/cycle component in traversal order (paths from the
/// smaller end, cycles from the smallest vertex toward its smaller neighbor).
CyclePath trace_component(const Graph& g, const std::vector<int>& comp);

} // namespace spc
