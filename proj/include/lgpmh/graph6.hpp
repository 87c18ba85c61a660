#pragma once

#include <string>
#include <string_view>

#include "lgpmh/graph.hpp"

namespace lgpmh {

/// Decodes one graph6 record. Trailing '\n'/'\r' and a leading
/// ">>graph6<<" header are tolerated. Throws FormatError on bytes outside
/// 63..126, truncated or overlong bit vectors, and nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6 without header or newline.
std::string write_graph6(const Graph& g);

}  // namespace lgpmh
