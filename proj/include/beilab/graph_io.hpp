#pragma once

#include <iosfwd>
#include <string>

#include "beilab/graph.hpp"

namespace beilab {

// Text format: first data line "n m", then m lines "u v" (1-indexed).
// '#' starts a comment; blank lines are skipped. n is capped at 64.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);

std::string format_graph(const Graph& g);

}  // namespace beilab
