#include "pcla/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace pcla {

CommutationGraph::CommutationGraph(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
  if (names_.size() > kMaxGenerators)
    throw Error("too many generators (limit is " +
                std::to_string(kMaxGenerators) + ")");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty generator name");
    if (!seen.insert(n).second) throw Error("duplicate generator '" + n + "'");
  }
  adj_.assign(names_.size(), GenSet{});
  for (const auto& [a, b] : edges) add_edge_checked(index_of(a), index_of(b));
}

CommutationGraph::CommutationGraph(std::vector<std::string> names,
                                   const std::vector<std::pair<int, int>>& edges)
    : CommutationGraph(std::move(names),
                       std::vector<std::pair<std::string, std::string>>{}) {
  for (const auto& [a, b] : edges) {
    check_vertex(a);
    check_vertex(b);
    add_edge_checked(a, b);
  }
}

void CommutationGraph::add_edge_checked(int a, int b) {
  if (a == b)
    throw Error("loop edge on generator '" + names_[static_cast<std::size_t>(a)] + "'");
  adj_[static_cast<std::size_t>(a)].add(b);
  adj_[static_cast<std::size_t>(b)].add(a);
}

void CommutationGraph::check_vertex(int a) const {
  if (a < 0 || a >= size())
    throw UnknownGeneratorError("#" + std::to_string(a));
}

int CommutationGraph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw UnknownGeneratorError(std::string(name));
}

bool CommutationGraph::has_generator(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool CommutationGraph::adjacent(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  return adj_[static_cast<std::size_t>(a)].contains(b);
}

bool CommutationGraph::adjacent_to_all(int a, GenSet s) const {
  check_vertex(a);
  if (!s.subset_of(vertices()))
    throw UnknownGeneratorError("#" + std::to_string(s.to_vector().back()));
  return s.subset_of(adj_[static_cast<std::size_t>(a)]);
}

CommutationGraph CommutationGraph::induced(GenSet s) const {
  if (!s.subset_of(vertices()))
    throw UnknownGeneratorError("#" + std::to_string(s.to_vector().back()));
  const std::vector<int> keep = s.to_vector();
  std::vector<std::string> sub_names;
  sub_names.reserve(keep.size());
  for (int v : keep) sub_names.push_back(names_[static_cast<std::size_t>(v)]);
  std::vector<std::pair<int, int>> sub_edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j]))
        sub_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return CommutationGraph(std::move(sub_names), sub_edges);
}

CommutationGraph CommutationGraph::complement() const {
  std::vector<std::pair<int, int>> co_edges;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (!adjacent(a, b)) co_edges.emplace_back(a, b);
  return CommutationGraph(names_, co_edges);
}

std::vector<GenSet> CommutationGraph::components() const {
  std::vector<GenSet> out;
  GenSet left = vertices();
  while (!left.empty()) {
    const int seed = left.min();
    GenSet comp = GenSet::single(seed);
    GenSet frontier = comp;
    while (!frontier.empty()) {
      GenSet next;
      for (int v : frontier.to_vector()) next |= neighbors(v);
      next = (next & left) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  // Seeds are taken smallest-first, so the list is already ordered by
  // smallest member.
  return out;
}

std::vector<std::pair<int, int>> CommutationGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace pcla
