#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "detold/graph.hpp"

namespace detold {

// Canonical graph6 encoding (nauty's format). Bit-exact for n <= 62; the
// four-byte extended header covers 63 <= n <= 258047.
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" prefix. Rejects bad characters, truncated
// payloads and nonzero padding bits.
Graph parse_graph6(std::string_view line);

// One graph per non-empty line.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

} // namespace detold
