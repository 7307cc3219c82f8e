#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spc/packing.hpp"

namespace spc {

struct SolveConfig {
    std::uint64_t node_budget = 100'000'000;
    std::optional<double> wall_seconds;
    bool symmetry_breaking = true;
    int threads = 1; // 1 = sequential; the outcome is deterministic either way

    /// Optional per-vertex class restriction (bitmask over classes, bit i-1 for
    /// class i). Empty = all classes allowed. Used by colorers that must keep a
    /// class on a restricted vertex set.
    std::vector<std::uint32_t> allowed;
};

struct SolveOutcome {
    enum class Status { colorable, not_colorable, timeout };

    Status status = Status::timeout;
    std::optional<PackingColoring> witness;
    std::uint64_t nodes = 0;

    bool colorable() const { return status == Status::colorable; }
};

/// Complete backtracking decision procedure. Sound (the witness is verified
/// in-process before returning) and complete within budget.
SolveOutcome decide(const Graph& g, const SSequence& s, const SolveConfig& cfg = {});

/// Plain enumeration oracle for tiny instances: exhaustive search over all
/// k^n assignments (violating prefixes are cut, which discards no assignment).
/// Requires n <= 10 and k <= 6.
SolveOutcome decide_all_small(const Graph& g, const SSequence& s);

} // namespace spc
