#pragma once

#include "token_alpha/graph.hpp"
#include "token_alpha/token_graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace token_alpha {

/// Writes "p <order> <edge_count>" followed by one "e u v" line per edge,
/// 0-indexed.
void write_edge_list(std::ostream &out, const Graph &g);

/// Same format as write_edge_list, preceded by one "c pair i = {a,b}" line
/// per token vertex.
void write_token_graph(std::ostream &out, const TokenGraph &tg);

/// Reads either the native edge-list format or DIMACS ("p edge n m", 1-indexed
/// "e" lines), returning a 0-indexed graph. "c" lines and blank lines are
/// ignored. Throws ParseError with the offending line number.
Graph read_graph(std::istream &in);

Graph read_graph_file(const std::filesystem::path &path);
void write_graph_file(const std::filesystem::path &path, const Graph &g);

std::string to_edge_list(const Graph &g);

} // namespace token_alpha
