#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

// graph6: order prefix (one byte for n <= 62, '~' plus three bytes up to
// 258047) followed by the upper triangle in column order, six bits per
// printable byte offset by 63. Malformed input throws ParseError.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// One graph per line. Blank lines are skipped and trailing '\r' is dropped.
// ParseError offsets are relative to the offending line; the line number is
// folded into the message.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace tough
