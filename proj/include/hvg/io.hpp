#pragma once

#include <string>

#include "hvg/construct.hpp"
#include "hvg/graph.hpp"

namespace hvg {

// Plain-text graph document: a "n <count>" header followed by one
// "i j" line per edge in canonical order.
std::string to_edge_list(const Graph& g);

// JSON graph document: {"n": ..., "edges": [[i, j], ...]}.
std::string to_json(const Graph& g);

// Graphviz rendering with vertices laid out left to right.
std::string to_dot(const Graph& g);

// Reads either graph document format; a leading '{' selects JSON.
Graph parse_graph(const std::string& text);

// Series files hold one sequence per line: non-negative decimal values
// separated by whitespace and/or commas.  Lines whose first non-blank
// character is '#' are ignored; a line with no values is an error.
std::vector<DataSequence> parse_series_file(const std::string& text);

// One-line rendering of a sequence; integral values print without a
// decimal point so round-tripping stays tidy.
std::string format_sequence(const DataSequence& d);

} // namespace hvg
