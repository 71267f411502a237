#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gpkit/graph.hpp"

namespace gpkit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decodes one graph6 record (short form, order 1..62). A leading
/// ">>graph6<<" header and a trailing '\r' are tolerated.
Graph parse_graph6(std::string_view line);

/// Encodes in standard short-form graph6: size byte n+63, then the
/// upper triangle column-major, 6 bits per byte, each byte +63.
/// Orders above 62 are rejected.
std::string to_graph6(const Graph& g);

}  // namespace gpkit
