#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "aeq/graph.hpp"

namespace aeq {

/// Header-less graph6 line (no trailing newline).
std::string to_graph6(const Graph& g);

Graph from_graph6(std::string_view line);

/// One graph per line; blank lines and an optional ">>graph6<<" header
/// are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs);

}  // namespace aeq
