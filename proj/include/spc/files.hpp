#pragma once

#include <iosfwd>
#include <string>

#include "spc/packing.hpp"

namespace spc {

/// Graph file: line 1 "n m", then m lines "u v" (0-based); '#' starts a
/// comment, blank lines are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

/// Coloring file: line 1 the S-sequence ("s1,s2,..."), line 2 the n class
/// indices (1-based, space-separated).
struct ColoringFile {
    SSequence s;
    PackingColoring coloring;
};

ColoringFile read_coloring(std::istream& in);
ColoringFile read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const ColoringFile& cf);
void write_coloring_file(const std::string& path, const ColoringFile& cf);

} // namespace spc
