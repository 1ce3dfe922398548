#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

struct ParseError : std::runtime_error {
    std::size_t offset;  // byte (graph6) or line (edge list) position
    ParseError(const std::string& msg, std::size_t off) : std::runtime_error(msg), offset(off) {}
};

// graph6: 6-bit big-endian packing of the upper triangle, column major,
// bytes offset by 63. Accepts an optional ">>graph6<<" header. One record.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// "n m" header line then m "u v" lines. Duplicate edges collapse.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// reads consecutive graph6 lines, skipping blank ones
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace tough
