#pragma once

#include <span>
#include <string>
#include <string_view>

#include "graphframes/graph.hpp"

namespace graphframes {

// Text format: optional '#' comment and blank lines anywhere; the first
// data line is the vertex count, every following data line one "u v" edge.
// Parse errors carry the 1-based line number. Writing emits the format
// comment, the vertex count, and the sorted edge list; extra_comments are
// placed after the format line.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g, std::span<const std::string> extra_comments = {});

}  // namespace graphframes
