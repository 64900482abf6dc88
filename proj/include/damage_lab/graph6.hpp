#pragma once

#include <string>
#include <string_view>

#include "damage_lab/graph.hpp"

namespace damage_lab {

// graph6 as published with nauty: N(n) followed by the upper triangle of the
// adjacency matrix in column order, six bits per printable byte (value + 63).
// An optional ">>graph6<<" header and a trailing newline are accepted.

/// Throws std::invalid_argument on a malformed size header, bytes outside
/// [63, 126], a truncated or overlong payload, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

}  // namespace damage_lab
