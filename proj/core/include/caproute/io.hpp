#pragma once

#include <string>
#include <string_view>

#include "caproute/loaded_graph.hpp"

namespace caproute {

enum class GraphFormat { Auto, EdgeList, Json };

// Edge-list text: one `<label-u> <label-v> <load>` per line, whitespace
// separated, `#` starts a comment, labels are UTF-8 without whitespace.
// Isolated nodes cannot be expressed in this format; use JSON for them.
LoadedGraph parse_edge_list(std::string_view text);

// JSON: {"nodes": ["a", ...], "edges": [{"u": "a", "v": "b", "load": 0.6}, ...]}
// The nodes array is optional and may list isolated nodes.
LoadedGraph parse_json_graph(std::string_view text);

// Auto sniffs JSON by a leading '{'.
LoadedGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

std::string serialize_edge_list(const LoadedGraph& g);
std::string serialize_json_graph(const LoadedGraph& g);

// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

// DOT export. All node sets and paths are in g's node ids; congested edges
// get the attribute congested=true and a heavier pen, filled_nodes are
// shaded, consecutive path nodes get bold edges.
struct DotStyle {
    std::vector<EdgeId> congested_edges;
    NodeSet filled_nodes;
    std::vector<NodeId> path;
};
std::string to_dot(const LoadedGraph& g, const DotStyle& style = {});

std::string read_file(const std::string& path);

}  // namespace caproute
