#pragma once

#include <string>
#include <vector>

#include "diss/graph.hpp"

namespace diss {

enum class GraphFormat { Graph6, EdgeList, Dot };

// Edge list: first non-comment line "n", then "u v" per line; '#' starts a
// comment. graph6: McKay's format, one graph per string.
Graph parse_graph(const std::string& text, GraphFormat format);

// Dot is export-only; parse_graph(write_graph(g, f), f) reproduces g with
// identical labels for graph6 and edge-list.
std::string write_graph(const Graph& g, GraphFormat format);

// Splits a file's content into one graph per line (graph6) or a single
// edge-list graph, depending on format.
std::vector<Graph> parse_graph_file(const std::string& text, GraphFormat format);

// Heuristic: a leading '#' or a first token that is a bare integer means
// edge-list, anything else graph6.
GraphFormat sniff_format(const std::string& text);

} // namespace diss
