#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tdmsd/graph.hpp"

namespace tdmsd {

/// graph6 line for g; n <= 62. Throws TooLarge.
std::string to_graph6(const Graph& g);
/// Parses one graph6 line (an optional ">>graph6<<" header is accepted).
/// Throws MalformedInput.
Graph from_graph6(std::string_view line);

/// "n m" followed by m lines "u v".
std::string to_edge_list(const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };

/// Guesses the format from the first non-blank line: two integers mean an
/// edge list, anything else graph6.
GraphFormat sniff_format(std::string_view text);

/// Reads every graph in `text`. Edge lists may be concatenated; lines
/// starting with '#' or "status:" are skipped. Throws MalformedInput.
std::vector<Graph> parse_graphs(std::string_view text);
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format);

std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace tdmsd
