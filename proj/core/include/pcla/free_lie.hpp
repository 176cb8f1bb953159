#pragma once

#include <map>
#include <utility>

#include "pcla/element.hpp"
#include "pcla/words.hpp"

namespace pcla {

/// Memo table for bracket expansions of LS monomial pairs.  Entries are
/// keyed by flattened words, so a cache is only valid for a single generator
/// order.  Not thread-safe; share one per worker when batching products.
class FreeBracketCache {
public:
  const LieElement* find(const Word& hi, const Word& lo) const {
    auto it = memo_.find({hi, lo});
    return it == memo_.end() ? nullptr : &it->second;
  }
  void store(const Word& hi, const Word& lo, LieElement value) {
    memo_.emplace(std::make_pair(hi, lo), std::move(value));
  }
  std::size_t size() const { return memo_.size(); }

private:
  std::map<std::pair<Word, Word>, LieElement> memo_;
};

/// Bracket of two LS monomials expanded over the LS basis of the free Lie
/// algebra.  Equal arguments give zero; swapped arguments flip sign; a pair
/// that fails the standard-bracketing condition is rewritten through the
/// Jacobi identity.  All coefficients are integers, and for a > b the word
/// ab appears with coefficient exactly 1 while every other term is strictly
/// smaller in word order.  Errors on non-LS input.
LieElement free_bracket(const GeneratorOrder& o, const LieMonomial& a,
                        const LieMonomial& b);
LieElement free_bracket(const GeneratorOrder& o, const LieMonomial& a,
                        const LieMonomial& b, FreeBracketCache& cache);

/// Bilinear extension to LS-form elements.
LieElement free_bracket_elements(const LieElement& a, const LieElement& b,
                                 FreeBracketCache& cache);

}  // namespace pcla
