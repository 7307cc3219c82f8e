#pragma once

#include <variant>
#include <vector>

#include "spc/classify.hpp"
#include "spc/graph.hpp"

namespace spc {

/// Chordless cycle of order >= 4, or nothing. In the diamond-free graphs the
/// decomposition works on, "nothing" means every cycle is a triangle.
std::optional<CyclePath> find_good_cycle(const Graph& g);

/// 2-packing Y such that G - Y is a disjoint union of paths with the cross
/// distance guarantees needed by the coloring assemblies.
struct PathDecomposition {
    std::vector<int> y;
    std::vector<CyclePath> paths;
};

/// Returned instead of a decomposition when construction uncovers a cycle C
/// with N[C] = V(G); the caller owns that case.
struct DominatingCycle {
    CyclePath cycle;
};

using DecomposeResult = std::variant<PathDecomposition, DominatingCycle>;

/// Requires: connected, 2-saturated, g3 = 3, delta = 2, Delta = 3, diamond-free.
/// The "no dominating cycle" hypothesis is re-checked lazily during the peel.
DecomposeResult decompose_2sat(const Graph& g);

/// Disjoint 2-packing X and 4-/3-packing Y covering the triangles, plus the
/// extension pair whose removal leaves a bipartite remainder.
struct ExtensionPair {
    std::vector<int> x, y;   // base pair, at most one vertex per triangle
    std::vector<int> xt, yt; // extension supersets
    std::array<int, 3> weights{4, 2, 1};
    int theta = 0;
    int gamma = 0;
    std::vector<int> side;   // bipartition labels of g minus (xt u yt), -1 on members
};

struct DominatedOddCycle {
    CyclePath cycle;
};

using PairSearchResult = std::variant<ExtensionPair, DominatedOddCycle>;

/// Requires: connected, (3,i)-saturated for i in {0,1}, g3 = 3.
PairSearchResult packing_pair_search(const Graph& g, int i);

/// One vertex per triangle, minimizing |T|, then maximizing 2-vertices, then
/// non-heavy 3-vertices; g3t is the distance-3 power graph on T.
struct TriangleTransversal {
    std::vector<int> t;
    InducedSubgraph g3t;
};

/// Requires: connected, (3,2)-saturated, g3 = 3, delta = 2, no adjacent
/// 2-vertices. Throws ErrorKind::k4_component when g3t is K4 (caller branch).
TriangleTransversal triangle_transversal(const Graph& g);

/// Proper 3-coloring (values 1..3) of a graph with no K4 component, by peeling
/// low-degree vertices next to degree-4 ones and a constructive Brooks step.
std::vector<int> brooks_3color(const Graph& h);

/// One degree-2 vertex (in g) per odd cycle of the induced subgraph on
/// r_vertices; the returned set is pairwise at distance >= 4 in g.
std::vector<int> odd_cycle_reps(const Graph& g, const std::vector<int>& r_vertices);

} // namespace spc
