#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "pcla/errors.hpp"
#include "pcla/gen_set.hpp"
#include "pcla/graph.hpp"

namespace pcla {

/// Associative word: a sequence of generator indices.  May be empty.
using Word = std::vector<int>;

/// A linear order on the generators, highest letter first.
class GeneratorOrder {
public:
  /// Order listing generator indices from highest to lowest.
  /// Must be a permutation of 0..n-1.
  static GeneratorOrder descending(std::vector<int> highest_first);

  /// Declaration order: the first declared generator is the highest letter.
  static GeneratorOrder declaration(int n);

  /// Order given by names, highest first; must mention every generator.
  static GeneratorOrder from_names(const CommutationGraph& g,
                                   const std::vector<std::string>& highest_first);

  int size() const { return static_cast<int>(rank_.size()); }

  /// Smaller rank = higher letter.
  int rank(int generator) const { return rank_[static_cast<std::size_t>(generator)]; }

  /// <0 / 0 / >0 like a three-way comparison of letters a vs b.
  std::strong_ordering compare_letters(int a, int b) const {
    // higher letter = smaller rank
    const int ra = rank(a), rb = rank(b);
    if (ra < rb) return std::strong_ordering::greater;
    if (ra > rb) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  /// Generator indices from the highest letter down.
  std::vector<int> letters_descending() const;

  bool operator==(const GeneratorOrder&) const = default;

private:
  explicit GeneratorOrder(std::vector<int> rank) : rank_(std::move(rank)) {}
  std::vector<int> rank_;  // rank_[generator] = position, 0 = highest
};

/// Word order used throughout: the empty word is strictly greater than every
/// nonempty word; otherwise first letters decide and ties recurse on tails.
/// Consequently every proper prefix of a word is greater than the word.
std::strong_ordering compare_words(const GeneratorOrder& o, const Word& u,
                                   const Word& v);

/// Lyndon-type predicate: u is strictly greater than each of its proper
/// rotations.  Errors on the empty word.
bool is_lsa(const GeneratorOrder& o, const Word& u);

/// Per-generator occurrence counts of a monomial or word.
struct Multidegree {
  std::vector<int> counts;

  int total() const;
  Multidegree operator+(const Multidegree& other) const;
  bool operator==(const Multidegree&) const = default;
};

Multidegree multidegree_of_word(const Word& w, int n_generators);

/// Order on multidegrees: the listed generators are compared first, in the
/// listed sequence; ties fall through to the remaining generators in
/// declaration order.
class MultidegreeOrder {
public:
  /// `compared_first` lists distinct generator indices, the one compared
  /// first coming first.  It need not be exhaustive.
  MultidegreeOrder(std::vector<int> compared_first, int n_generators);

  std::strong_ordering compare(const Multidegree& a, const Multidegree& b) const;

private:
  std::vector<int> sequence_;  // all generators, comparison order
};

inline std::strong_ordering compare_multidegree(const MultidegreeOrder& omega,
                                                const Multidegree& a,
                                                const Multidegree& b) {
  return omega.compare(a, b);
}

/// Non-associative monomial: a binary bracketing tree over generators.
/// Immutable; nodes cache the flattened word and the support set.
class LieMonomial {
public:
  static LieMonomial leaf(int generator);
  static LieMonomial pair(const LieMonomial& left, const LieMonomial& right);

  bool is_leaf() const { return node_->left == nullptr; }
  int generator() const { return node_->gen; }
  LieMonomial left() const;
  LieMonomial right() const;

  const Word& word() const { return node_->word; }
  int degree() const { return static_cast<int>(node_->word.size()); }
  int first_letter() const { return node_->word.front(); }
  GenSet support() const { return node_->supp; }

  /// Structural equality.
  bool operator==(const LieMonomial& other) const;

private:
  struct Node {
    int gen = -1;
    std::shared_ptr<const Node> left, right;
    Word word;
    GenSet supp;
  };
  explicit LieMonomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Multidegree multidegree(const LieMonomial& m, int n_generators);
GenSet support(const LieMonomial& m);

/// The unique standard bracketing of an LSA word: a leaf for single letters,
/// otherwise ([v],[w]) where w is the greatest proper suffix that is itself
/// LSA and v is the remaining prefix.  Errors on non-LSA input.
LieMonomial bracket_word(const GeneratorOrder& o, const Word& u);

/// Non-associative Lyndon-Shirshov test: the flattened word is LSA, children
/// are themselves LS with left word > right word, and when the left child
/// splits as ([u11],[u12]) the right word is >= u12.
bool is_ls(const GeneratorOrder& o, const LieMonomial& m);

/// Basis-monomial test for the graph-defined quotient: an LS monomial whose
/// factors are recursively admissible and where, at every node ([v],[w]),
/// the first letter of w fails to be adjacent to at least one letter of v.
bool is_pcls(const GeneratorOrder& o, const CommutationGraph& g,
             const LieMonomial& m);

/// All LSA words of the given length, descending.  Internal building block
/// shared by the enumerators.
std::vector<Word> enumerate_lsa(const GeneratorOrder& o, int length);

/// All admissible basis monomials per total degree 1..dmax; each per-degree
/// list descending by flattened word.  Errors when dmax < 1.
std::vector<std::vector<LieMonomial>> enumerate_pcls(const GeneratorOrder& o,
                                                     const CommutationGraph& g,
                                                     int dmax);

}  // namespace pcla
