#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pcla/element.hpp"
#include "pcla/free_lie.hpp"
#include "pcla/graph.hpp"
#include "pcla/linalg.hpp"
#include "pcla/words.hpp"

namespace pcla {

/// Precomputed rewriting of every non-admissible LS monomial of total degree
/// <= d into a reduced combination of strictly smaller admissible monomials.
/// Realizes the quotient by the edge relators.  Immutable after build.
class ReductionTable {
public:
  /// Spans each graded piece of the relator ideal (edge brackets, closed
  /// under bracketing with generators), eliminates exactly over the
  /// rationals, and reads off the rewriting of each non-admissible monomial.
  /// Two internal cross-checks guard the construction: the pivot set of each
  /// graded piece must be exactly its non-admissible monomial set (so the
  /// residual dimension matches the admissible count), and every produced
  /// coefficient must be an integer.  Either failure raises ConsistencyError.
  static ReductionTable build(const CommutationGraph& g,
                              const GeneratorOrder& o, int dmax);

  const CommutationGraph& graph() const { return graph_; }
  const GeneratorOrder& order() const { return order_; }
  int degree_bound() const { return dmax_; }

  /// Rewriting of a non-admissible LS monomial; nullptr when the monomial is
  /// admissible (identity rewriting).
  const LieElement* find(const Word& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t entry_count() const { return entries_.size(); }

  /// All rewrites, keyed by source word.
  const std::map<Word, LieElement>& entries() const { return entries_; }

private:
  ReductionTable(CommutationGraph g, GeneratorOrder o, int dmax)
      : graph_(std::move(g)), order_(std::move(o)), dmax_(dmax) {}

  CommutationGraph graph_;
  GeneratorOrder order_;
  int dmax_;
  std::map<Word, LieElement> entries_;
};

/// Convenience alias mirroring the operation name.
inline ReductionTable build_reduction(const CommutationGraph& g,
                                      const GeneratorOrder& o, int dmax) {
  return ReductionTable::build(g, o, dmax);
}

/// Projects an LS-form element onto the admissible basis by substituting
/// every non-admissible monomial through the table.  Linear and idempotent.
/// Errors when a term exceeds the table's degree bound.
LieElement normal_form(const ReductionTable& t, const LieElement& e);

/// Lie product of two reduced elements, fully reduced again.
/// Requires degree(g) + degree(h) <= table bound.
LieElement bracket(const ReductionTable& t, const LieElement& g,
                   const LieElement& h);
LieElement bracket(const ReductionTable& t, const LieElement& g,
                   const LieElement& h, FreeBracketCache& cache);

}  // namespace pcla
