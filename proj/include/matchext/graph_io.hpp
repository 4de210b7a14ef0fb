#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "matchext/graph.hpp"

namespace matchext {

enum class GraphFormat { Graph6, EdgeList, FamilyRef };

/// Standard graph6: size header, then the upper triangle column by column in
/// 6-bit groups offset by 63. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws MalformedGraph6 with the byte offset.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

/// "n <count>" then one "u v" line per edge (0-based). Blank lines and lines
/// starting with '#' are skipped. Throws ParseError / SelfLoop / DuplicateEdge.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// A graph named on the command line: a family reference or a graph6 string.
struct GraphDocument {
  GraphFormat format = GraphFormat::Graph6;
  std::string payload;
  Graph resolved;
};

GraphDocument resolve_graph_ref(const std::string& text);
/// Whole-file read: edge list when `format` is EdgeList, otherwise the first
/// non-empty graph6 line.
GraphDocument load_graph_file(const std::string& path, GraphFormat format);
/// All non-empty graph6 lines of a file.
std::vector<Graph> load_graph6_file(const std::string& path);

}  // namespace matchext
