#pragma once

#include <string>
#include <string_view>

#include "factorlab/graph.hpp"

namespace factorlab {

/// Decodes one graph6 line (no trailing newline). An optional ">>graph6<<"
/// header is accepted. Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes in graph6. Orders above 62 use the four-byte size form.
std::string to_graph6(const Graph& g);

}  // namespace factorlab
