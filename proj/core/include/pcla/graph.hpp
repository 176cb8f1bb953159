#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcla/errors.hpp"
#include "pcla/gen_set.hpp"

namespace pcla {

/// A named generator together with its position in the declaration order.
struct Generator {
  int index = 0;
  std::string name;
};

/// Finite loop-free undirected graph on an ordered set of generators.
/// An edge {a,b} marks a commuting pair.  Immutable after construction.
class CommutationGraph {
public:
  static constexpr int kMaxGenerators = 64;

  /// Builds a graph from generator names (declaration order is kept) and
  /// edges given as name pairs.  Rejects duplicate names, unknown edge
  /// endpoints and loops.
  CommutationGraph(std::vector<std::string> names,
                   const std::vector<std::pair<std::string, std::string>>& edges);

  /// Index-based constructor, mostly for tests and generated graph families.
  CommutationGraph(std::vector<std::string> names,
                   const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Declared index of a generator name; throws UnknownGeneratorError.
  int index_of(std::string_view name) const;
  bool has_generator(std::string_view name) const;

  GenSet vertices() const { return GenSet::full(size()); }
  GenSet neighbors(int a) const { return adj_[static_cast<std::size_t>(a)]; }

  /// True iff {a,b} is an edge.  Loop-free: adjacent(a,a) is always false.
  bool adjacent(int a, int b) const;

  /// True iff `a` is adjacent to every member of `s`.  Vacuously true on the
  /// empty set; implies a is not in s.
  bool adjacent_to_all(int a, GenSet s) const;

  /// Subgraph on the vertex set `s`; generator order inherited.
  CommutationGraph induced(GenSet s) const;

  /// Same vertices, complemented edge set (still loop-free).
  CommutationGraph complement() const;

  /// Connected components as vertex sets, ordered by smallest member.
  std::vector<GenSet> components() const;

  /// Edges as index pairs (a < b), in deterministic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const CommutationGraph&) const = default;

private:
  void check_vertex(int a) const;
  void add_edge_checked(int a, int b);

  std::vector<std::string> names_;
  std::vector<GenSet> adj_;
};

}  // namespace pcla
