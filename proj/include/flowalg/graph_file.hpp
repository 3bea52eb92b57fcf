#pragma once

// Plain-text graph files:
//   # comment
//   vertex <id>
//   edge <id> <tail> <head>

#include <string>

#include "flowalg/graph.hpp"

namespace flowalg {

/// Throws InputError naming the line for malformed lines, duplicate vertex or
/// edge ids and edges that mention undeclared vertices.
Graph parse_graph_text(const std::string& text);
Graph parse_graph(const std::string& path);

std::string format_graph(const Graph& g);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Whole file contents; InputError if unreadable.
std::string read_file(const std::string& path);

}  // namespace flowalg
