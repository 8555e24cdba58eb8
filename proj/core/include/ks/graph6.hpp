#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ks/graph.hpp"

namespace ks {

/// Decodes one graph6 record (no trailing newline). Throws InputError on a
/// malformed size header, bytes outside 63..126, wrong length or nonzero
/// padding bits. Graphs with more than 64 vertices are rejected.
Graph from_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

struct Graph6Record {
  std::size_t line = 0;  // 1-based
  std::optional<Graph> graph;
  std::string error;  // set when graph is empty
};

/// Reads one graph per line. Blank lines are skipped and a leading
/// ">>graph6<<" header is stripped. CR before LF is tolerated.
std::vector<Graph6Record> read_graph6_stream(std::istream& in);

}  // namespace ks
