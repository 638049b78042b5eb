#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "raagqi/graph.hpp"

namespace raagqi {

enum class GraphFormat { edge_list, json };

/// Parses a graph. Edge-list format: one edge per line as two
/// whitespace-separated labels, `v <label>` declares an isolated vertex,
/// blank lines and lines starting with '#' are ignored. JSON format:
/// {"vertices": [...], "edges": [[a, b], ...]}.
///
/// Throws ParseError carrying the 1-based line and column of the offending
/// token (JSON syntax errors carry the byte offset as the column; semantic
/// JSON errors carry the element index).
SimplicialGraph parse_graph(std::string_view text, GraphFormat format);

/// Reads a file; `.json` selects the JSON format, anything else edge-list.
SimplicialGraph load_graph(const std::filesystem::path& path);
GraphFormat format_for(const std::filesystem::path& path);

/// Canonical serialisations: vertices and edges in canonical order.
std::string to_edge_list(const SimplicialGraph& g);
std::string to_json_text(const SimplicialGraph& g);

}  // namespace raagqi
