#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "pursuit/graph.hpp"

namespace pursuit::io {

using GraphVariant = std::variant<UndirectedGraph, OrientedGraph>;

/// Canonical form: {"directed": bool, "vertices": [names...], "arcs": [[u,v]...]}
/// with vertices in id order and arcs sorted by id pair. Emitting, parsing and
/// emitting again reproduces the same bytes.
nlohmann::ordered_json graph_to_json(const UndirectedGraph& g);
nlohmann::ordered_json graph_to_json(const OrientedGraph& g);
nlohmann::ordered_json graph_to_json(const GraphVariant& g);
std::string to_canonical_json(const GraphVariant& g);

GraphVariant graph_from_json(const nlohmann::json& j);
GraphVariant parse_graph_json(const std::string& text);
GraphVariant load_graph_file(const std::string& path);

/// Plain text: one "u v" pair per line, '#' starts a comment. Vertices are
/// named by their tokens, ids assigned in order of first appearance.
GraphVariant parse_edge_list(const std::string& text, bool directed);

std::string to_dot(const UndirectedGraph& g);
std::string to_dot(const OrientedGraph& g);
std::string to_dot(const GraphVariant& g);

std::string sha256_hex(std::string_view bytes);

bool is_directed(const GraphVariant& g);
const OrientedGraph& expect_oriented(const GraphVariant& g, const std::string& what);
const UndirectedGraph& expect_undirected(const GraphVariant& g, const std::string& what);

} // namespace pursuit::io
