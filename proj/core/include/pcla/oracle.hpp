#pragma once

#include <vector>

#include "pcla/centralizer.hpp"
#include "pcla/element.hpp"
#include "pcla/linalg.hpp"
#include "pcla/reduction.hpp"

namespace pcla {

/// Exact basis of a degree-truncated centralizer: elements spanning
/// {h : deg(h) <= degree_bound, bracket(g,h) = 0}, plus their coefficient
/// matrix in reduced row echelon form over the admissible monomials of
/// degree <= degree_bound (columns ordered degree-ascending, words
/// descending within a degree).
struct KernelBasis {
  int degree_bound = 0;
  GeneratorOrder order;
  std::vector<Word> columns;
  std::vector<LieElement> elements;
  QMatrix echelon;
};

/// Flattened admissible basis up to a degree, in the canonical column order
/// used by KernelBasis.
std::vector<LieMonomial> pcls_basis_flat(const GeneratorOrder& o,
                                         const CommutationGraph& g, int dmax);

/// Kernel of h -> bracket(g,h) on the admissible basis up to degree d,
/// computed by exact elimination.  Requires deg(g) + d <= table bound.
KernelBasis brute_force_centralizer(const ReductionTable& t,
                                    const LieElement& g, int d);

/// Span of the structural description truncated at degree d: the components
/// of g (those of degree <= d) together with every admissible monomial of
/// degree <= d supported in the common-neighbor set.
KernelBasis structural_kernel(const ReductionTable& t,
                              const CentralizerDescription& d, int degree);

/// Row-space equality via the canonical echelon forms.  Errors when the
/// degree bounds or column labelings differ.
bool kernels_equal(const KernelBasis& a, const KernelBasis& b);

/// Alternating clique generating polynomial: coefficient k is
/// (-1)^k * (number of k-cliques), counting the empty clique.
struct CliquePolynomial {
  std::vector<Integer> coefficients;

  bool operator==(const CliquePolynomial&) const = default;
};

CliquePolynomial clique_polynomial(const CommutationGraph& g);

/// Graded dimension certificate: with l_n the admissible count in degree n,
/// checks prod_{n=1}^{nmax} (1 - t^n)^{l_n} == clique polynomial of the
/// graph, modulo t^{nmax+1}, in exact integer arithmetic.  For the edgeless
/// graph this is the Witt formula.
bool dimension_check(const CommutationGraph& g, const GeneratorOrder& o,
                     int nmax);

}  // namespace pcla
