#pragma once

#include <cstdint>

#include "spc/classify.hpp"
#include "spc/graph.hpp"

namespace spc {

struct GenSpec {
    ClassConstraint constraint;
    int n_min = 8;
    int n_max = 24;
    std::uint64_t seed = 1;
    int max_attempts = 400;
};

/// Gadget-based assembly with repair passes and a final rejection check;
/// deterministic per seed. Throws ErrorKind::generation_exhausted when no
/// in-class graph materializes within max_attempts.
Graph generate(const GenSpec& spec);

std::vector<Graph> generate_suite(const ClassConstraint& constraint, int count, int n_min,
                                  int n_max, std::uint64_t seed);

} // namespace spc
