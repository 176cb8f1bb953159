#pragma once

#include <string>

#include "pcla/element.hpp"
#include "pcla/graph.hpp"
#include "pcla/words.hpp"

namespace pcla {

/// "x", "[x,[x,y]]" -- explicit brackets, no spaces.
std::string to_string(const LieMonomial& m, const CommutationGraph& g);

/// Canonical element text: terms in descending word order, every coefficient
/// printed explicitly, e.g. "3*x - 1*[[x,z],y]".  Zero prints "0".
/// parse_expr() round-trips this representation.
std::string to_string(const LieElement& e, const CommutationGraph& g);

/// "{x, y}" in declaration order.
std::string to_string(GenSet s, const CommutationGraph& g);

}  // namespace pcla
