#pragma once

#include <string>
#include <vector>

#include "spc/classify.hpp"
#include "spc/packing.hpp"
#include "spc/solver.hpp"

namespace spc {

/// Output of a constructive colorer. `coloring` always passes verify under
/// `seq` (checked before returning). `good` reports whether the restricted
/// classes landed only on their sanctioned vertices, where the underlying
/// argument defines such a restriction; special-cased exception graphs are
/// exempt from the scan.
struct ColorerResult {
    PackingColoring coloring;
    SSequence seq;
    bool good = true;
    std::vector<int> exempt; // bad-exception component vertices, outside the scan
    std::vector<std::string> trace;
};

/// S in {(1,1,3,k) k>=3, (1,2,2,3), (2,2,2,2,3), (1,2,3,4,5,k) k>=6} for
/// graphs that are 0-saturated with g3 <= 4 or 1-saturated with g3 = 3.
ColorerResult color_low_saturation(const Graph& g, const SSequence& s);

/// (1,2,2,2) for 1-saturated graphs with g3 <= 4.
ColorerResult color_1sat_g4(const Graph& g);

/// 2-saturated, g3 = 3.
ColorerResult color_2sat_112(const Graph& g);
ColorerResult color_2sat_1222(const Graph& g);
ColorerResult color_2sat_22222(const Graph& g);

enum class ThirtyVariant { v12222, v222222 };

/// (3,0)-saturated, g3 = 3: (1,2,2,2,2) or (2,2,2,2,2,2).
ColorerResult color_30sat(const Graph& g, ThirtyVariant variant);

/// (3,i)-saturated, g3 = 3: (1,1,2,4) for i = 0, (1,1,2,3) for i = 1.
ColorerResult color_3isat(const Graph& g, int i);

/// (3,2)-saturated, g3 = 3: (1,1,3,3,3).
ColorerResult color_32sat(const Graph& g);

/// Dispatch to the most specific constructive colorer whose class and sequence
/// cover (g, s); exact solver when none does.
ColorerResult auto_color(const Graph& g, const SSequence& s, const SolveConfig& cfg = {});

} // namespace spc
