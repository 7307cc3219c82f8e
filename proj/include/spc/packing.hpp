#pragma once

#include <string>
#include <vector>

#include "spc/graph.hpp"

namespace spc {

/// Non-decreasing positive integer sequence (s_1,...,s_k). Classes are the
/// positions 1..k; equal values still name distinct classes.
struct SSequence {
    std::vector<int> values;

    int k() const { return static_cast<int>(values.size()); }
    int at(int cls) const { return values[static_cast<size_t>(cls) - 1]; } // 1-based
    bool operator==(const SSequence&) const = default;
};

SSequence make_sequence(std::vector<int> values);
SSequence parse_sequence(const std::string& text);
std::string to_string(const SSequence& s);

/// Total assignment vertex -> class index in 1..k.
struct PackingColoring {
    std::vector<int> cls;

    int n() const { return static_cast<int>(cls.size()); }
    int at(int v) const { return cls[static_cast<size_t>(v)]; }
    bool operator==(const PackingColoring&) const = default;
};

struct Violation {
    int cls = 0;
    int u = 0;
    int v = 0;
    int dist = 0;
};

struct VerifyResult {
    bool valid = false;
    std::vector<Violation> violations;
};

/// Ground-truth validity check: same-class vertices must be at distance > s_i.
/// Reports every violating pair.
VerifyResult verify(const Graph& g, const SSequence& s, const PackingColoring& c);
VerifyResult verify(const Graph& g, const DistanceMatrix& dm, const SSequence& s,
                    const PackingColoring& c);

/// Pointwise dominance: same length and a_i >= b_i for all i, so any
/// a-coloring is also a b-coloring.
bool refines(const SSequence& a, const SSequence& b);

} // namespace spc
