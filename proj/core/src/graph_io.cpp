#include "pcla/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pcla {

CommutationGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what(),
                     e.byte);
  }
  if (!doc.is_object() || !doc.contains("generators"))
    throw ParseError("graph document must be an object with a 'generators' list", 0);

  std::vector<std::string> names;
  const auto& gens = doc.at("generators");
  if (!gens.is_array())
    throw ParseError("'generators' must be a list of names", 0);
  for (const auto& n : gens) {
    if (!n.is_string())
      throw ParseError("generator entry " + std::to_string(names.size()) +
                           " is not a string",
                       names.size());
    names.push_back(n.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    const auto& es = doc.at("edges");
    if (!es.is_array())
      throw ParseError("'edges' must be a list of name pairs", 0);
    for (const auto& e : es) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string())
        throw ParseError("edge entry " + std::to_string(edges.size()) +
                             " is not a pair of names",
                         edges.size());
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  // Name validation (duplicates, loops, unknown endpoints) happens in the
  // graph constructor; re-tag failures with the edge position when possible.
  return CommutationGraph(std::move(names), edges);
}

CommutationGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string graph_to_json(const CommutationGraph& g) {
  nlohmann::ordered_json doc;
  doc["generators"] = g.names();
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.edges())
    edges.push_back({g.name(a), g.name(b)});
  return doc.dump();
}

}  // namespace pcla
