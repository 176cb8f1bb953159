#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pcla/element.hpp"
#include "pcla/reduction.hpp"

namespace pcla {

/// Scalars witnessing lambda * g = mu * h, not both zero.
struct ProportionalityWitness {
  Scalar lambda;
  Scalar mu;
};

/// Finite presentation of the centralizer of g:
///   C(g) = { sum h_i + h' : h_i proportional to components[i],
///            support(h') inside common_neighbors }.
/// The components split g along the connected components of the complement
/// of the induced graph on its support; common_neighbors collects every
/// generator adjacent to all of support(g).
struct CentralizerDescription {
  LieElement g;
  std::vector<LieElement> components;
  std::vector<GenSet> component_supports;
  GenSet common_neighbors;
};

/// True iff the product vanishes.
bool commutes(const ReductionTable& t, const LieElement& g, const LieElement& h);
bool commutes(const ReductionTable& t, const LieElement& g, const LieElement& h,
              FreeBracketCache& cache);

/// Proportionality of two reduced elements over the same order.  The witness
/// is produced by the pivot criterion: with s the leading term of g (or of h
/// when g = 0), lambda = h's coefficient at s and mu = g's, once all cross
/// products agree.
std::optional<ProportionalityWitness> proportional(const LieElement& g,
                                                   const LieElement& h);

/// Commutation test for nonzero homogeneous elements that avoids products
/// entirely: overlapping supports commute iff the elements are proportional;
/// disjoint supports commute iff the supports are fully adjacent.
bool homogeneous_commutes_criterion(const CommutationGraph& g,
                                    const LieElement& a, const LieElement& b);

/// Structural description of C(g) for nonzero reduced g.
CentralizerDescription centralizer_of(const ReductionTable& t,
                                      const LieElement& g);

/// Membership test against a centralizer description: terms supported inside
/// support(g) accumulate into their component's bucket, which must end up
/// proportional to that component of g; terms disjoint from support(g) must
/// be supported in the common-neighbor set; terms with mixed support cannot
/// centralize at all.
bool centralizer_membership(const ReductionTable& t,
                            const CentralizerDescription& d,
                            const LieElement& h);

/// Common-neighbor set Y' of a linear combination of distinct generators
/// with nonzero coefficients.  The centralizer inside the derived subalgebra
/// is spanned by the admissible monomials of length >= 2 supported in Y'.
GenSet centralizer_in_commutant(
    const ReductionTable& t,
    const std::vector<std::pair<int, Scalar>>& coefficients);

}  // namespace pcla
