#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "iasl/graph.hpp"

namespace iasl {

/// Decodes one graph6 record (no header, no trailing newline). `line` only
/// feeds the position reported by ParseError.
Graph parse_graph6(std::string_view text, std::size_t line = 1);

std::string write_graph6(const Graph& g);

/// One graph per non-empty line; an optional ">>graph6<<" header on the
/// first line is skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace iasl
