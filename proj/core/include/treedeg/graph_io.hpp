#pragma once

#include <string>
#include <string_view>

#include "treedeg/graph.hpp"

namespace treedeg {

// graph6: 6-bit printable encoding of the upper triangle, column-major
// ((0,1),(0,2),(1,2),(0,3),...), bits packed MSB-first, each sextet + 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// Plain text fallback: one "u v" pair per line, 0-based. Vertex count is
// max index + 1 unless a larger hint is given; isolated tail vertices need it.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text, int n_hint = -1);

std::string to_dot(const Graph& g);

} // namespace treedeg
