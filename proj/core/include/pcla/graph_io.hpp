#pragma once

#include <string>
#include <string_view>

#include "pcla/graph.hpp"

namespace pcla {

/// Parses a JSON graph document of the form
///   {"generators": ["x","y","z"], "edges": [["x","y"]]}
/// Rejects malformed JSON (with byte position), duplicate generators, loop
/// edges and unknown edge endpoints (naming the entry).
CommutationGraph parse_graph(std::string_view text);

/// Reads and parses a graph file.
CommutationGraph load_graph_file(const std::string& path);

/// Serializes back to the document format above.
std::string graph_to_json(const CommutationGraph& g);

}  // namespace pcla
