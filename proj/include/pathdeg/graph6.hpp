#pragma once

#include <string>
#include <string_view>

#include "pathdeg/graph.hpp"

namespace pathdeg {

// Standard graph6 encoding: N(n) header, then the upper-triangle adjacency
// bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
// groups, each offset by 63, zero-padded to a multiple of 6 bits.
std::string to_graph6(const Graph& g);

// Strict decoder; rejects bytes outside [63,126], truncated bodies, trailing
// bytes, nonzero padding bits, and vertex counts above 64. Throws
// Graph6ParseError naming the byte offset.
Graph from_graph6(std::string_view s);

}  // namespace pathdeg
