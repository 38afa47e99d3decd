#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

class ParseError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

enum class GraphFormat { graph6, edge_list };

GraphFormat parse_format(std::string_view name);
std::string_view format_name(GraphFormat f);

// graph6: size header then the upper triangle, column by column, six bits per
// printable character (offset 63).
std::string to_graph6(const Graph &g);
Graph from_graph6(std::string_view line);

// Edge list: "n <count>" then one "u v" pair per line; '#' starts a comment.
// Duplicate edges are merged; loops and out-of-range endpoints are errors.
std::string to_edge_list(const Graph &g);
Graph from_edge_list(std::string_view text);

// graph6 reads one graph per non-empty line; edge_list reads one graph.
std::vector<Graph> read_graphs(std::istream &in, GraphFormat format);
std::string write_graph(const Graph &g, GraphFormat format);

} // namespace domcrit
