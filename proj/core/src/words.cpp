#include "pcla/words.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pcla {

GeneratorOrder GeneratorOrder::descending(std::vector<int> highest_first) {
  const int n = static_cast<int>(highest_first.size());
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (int pos = 0; pos < n; ++pos) {
    const int g = highest_first[static_cast<std::size_t>(pos)];
    if (g < 0 || g >= n || rank[static_cast<std::size_t>(g)] != -1)
      throw Error("generator order is not a permutation");
    rank[static_cast<std::size_t>(g)] = pos;
  }
  return GeneratorOrder(std::move(rank));
}

GeneratorOrder GeneratorOrder::declaration(int n) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return descending(std::move(ids));
}

GeneratorOrder GeneratorOrder::from_names(
    const CommutationGraph& g, const std::vector<std::string>& highest_first) {
  if (static_cast<int>(highest_first.size()) != g.size())
    throw Error("generator order must mention every declared generator");
  std::vector<int> ids;
  ids.reserve(highest_first.size());
  for (const auto& name : highest_first) ids.push_back(g.index_of(name));
  return descending(std::move(ids));
}

std::vector<int> GeneratorOrder::letters_descending() const {
  std::vector<int> out(rank_.size());
  for (int g = 0; g < size(); ++g) out[static_cast<std::size_t>(rank(g))] = g;
  return out;
}

std::strong_ordering compare_words(const GeneratorOrder& o, const Word& u,
                                   const Word& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = o.compare_letters(u[i], v[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  // The shorter word is a prefix of the longer one; by convention the empty
  // tail dominates, so the prefix is the greater word.
  if (u.size() == v.size()) return std::strong_ordering::equal;
  return u.size() < v.size() ? std::strong_ordering::greater
                             : std::strong_ordering::less;
}

bool is_lsa(const GeneratorOrder& o, const Word& u) {
  if (u.empty()) throw Error("is_lsa: empty word");
  Word rot;
  rot.reserve(u.size());
  for (std::size_t cut = 1; cut < u.size(); ++cut) {
    rot.assign(u.begin() + static_cast<std::ptrdiff_t>(cut), u.end());
    rot.insert(rot.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(cut));
    if (compare_words(o, rot, u) != std::strong_ordering::less) return false;
  }
  return true;
}

int Multidegree::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

Multidegree Multidegree::operator+(const Multidegree& other) const {
  if (counts.size() != other.counts.size())
    throw Error("multidegree length mismatch");
  Multidegree out{counts};
  for (std::size_t i = 0; i < counts.size(); ++i)
    out.counts[i] += other.counts[i];
  return out;
}

Multidegree multidegree_of_word(const Word& w, int n_generators) {
  Multidegree d{std::vector<int>(static_cast<std::size_t>(n_generators), 0)};
  for (int g : w) ++d.counts[static_cast<std::size_t>(g)];
  return d;
}

MultidegreeOrder::MultidegreeOrder(std::vector<int> compared_first,
                                   int n_generators) {
  std::vector<bool> listed(static_cast<std::size_t>(n_generators), false);
  for (int g : compared_first) {
    if (g < 0 || g >= n_generators)
      throw UnknownGeneratorError("#" + std::to_string(g));
    if (listed[static_cast<std::size_t>(g)])
      throw Error("multidegree order lists a generator twice");
    listed[static_cast<std::size_t>(g)] = true;
  }
  sequence_ = std::move(compared_first);
  for (int g = 0; g < n_generators; ++g)
    if (!listed[static_cast<std::size_t>(g)]) sequence_.push_back(g);
}

std::strong_ordering MultidegreeOrder::compare(const Multidegree& a,
                                               const Multidegree& b) const {
  if (a.counts.size() != b.counts.size() || a.counts.size() != sequence_.size())
    throw Error("multidegree length mismatch");
  for (int g : sequence_) {
    const int ca = a.counts[static_cast<std::size_t>(g)];
    const int cb = b.counts[static_cast<std::size_t>(g)];
    if (ca != cb) return ca <=> cb;
  }
  return std::strong_ordering::equal;
}

LieMonomial LieMonomial::leaf(int generator) {
  auto n = std::make_shared<Node>();
  n->gen = generator;
  n->word = {generator};
  n->supp = GenSet::single(generator);
  return LieMonomial(std::move(n));
}

LieMonomial LieMonomial::pair(const LieMonomial& left, const LieMonomial& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->word = left.word();
  n->word.insert(n->word.end(), right.word().begin(), right.word().end());
  n->supp = left.support() | right.support();
  return LieMonomial(std::move(n));
}

LieMonomial LieMonomial::left() const { return LieMonomial(node_->left); }

LieMonomial LieMonomial::right() const { return LieMonomial(node_->right); }

bool LieMonomial::operator==(const LieMonomial& other) const {
  if (node_ == other.node_) return true;
  if (node_->word != other.node_->word) return false;
  if (is_leaf() || other.is_leaf()) return is_leaf() && other.is_leaf();
  return left() == other.left() && right() == other.right();
}

Multidegree multidegree(const LieMonomial& m, int n_generators) {
  return multidegree_of_word(m.word(), n_generators);
}

GenSet support(const LieMonomial& m) { return m.support(); }

LieMonomial bracket_word(const GeneratorOrder& o, const Word& u) {
  if (!is_lsa(o, u)) throw Error("bracket_word: input word is not LSA");
  if (u.size() == 1) return LieMonomial::leaf(u.front());
  // Greatest proper suffix that is itself LSA.
  std::size_t best = 0;
  for (std::size_t cut = 1; cut < u.size(); ++cut) {
    const Word suffix(u.begin() + static_cast<std::ptrdiff_t>(cut), u.end());
    if (!is_lsa(o, suffix)) continue;
    if (best == 0) {
      best = cut;
      continue;
    }
    const Word current(u.begin() + static_cast<std::ptrdiff_t>(best), u.end());
    if (compare_words(o, suffix, current) == std::strong_ordering::greater)
      best = cut;
  }
  if (best == 0) throw ConsistencyError("LSA word with no LSA proper suffix");
  const Word prefix(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(best));
  const Word suffix(u.begin() + static_cast<std::ptrdiff_t>(best), u.end());
  LieMonomial result =
      LieMonomial::pair(bracket_word(o, prefix), bracket_word(o, suffix));
  assert(is_ls(o, result));
  return result;
}

bool is_ls(const GeneratorOrder& o, const LieMonomial& m) {
  if (m.is_leaf()) return true;
  const LieMonomial& l = m.left();
  const LieMonomial& r = m.right();
  if (!is_ls(o, l) || !is_ls(o, r)) return false;
  if (compare_words(o, l.word(), r.word()) != std::strong_ordering::greater)
    return false;
  if (!l.is_leaf() &&
      compare_words(o, r.word(), l.right().word()) == std::strong_ordering::less)
    return false;
  return is_lsa(o, m.word());
}

bool is_pcls(const GeneratorOrder& o, const CommutationGraph& g,
             const LieMonomial& m) {
  if (m.is_leaf()) return true;
  if (!is_ls(o, m)) return false;
  if (!is_pcls(o, g, m.left()) || !is_pcls(o, g, m.right())) return false;
  return !g.adjacent_to_all(m.right().first_letter(), m.left().support());
}

std::vector<Word> enumerate_lsa(const GeneratorOrder& o, int length) {
  if (length < 1) throw Error("enumerate_lsa: length must be positive");
  const std::vector<int> letters = o.letters_descending();
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(length));
  // Odometer over all words, letters tried from the highest down so the
  // surviving LSA words come out already sorted descending.
  std::vector<int> digit(static_cast<std::size_t>(length), 0);
  const int base = static_cast<int>(letters.size());
  while (true) {
    for (int i = 0; i < length; ++i)
      w[static_cast<std::size_t>(i)] =
          letters[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
    if (is_lsa(o, w)) out.push_back(w);
    int pos = length - 1;
    while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == base - 1) {
      digit[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digit[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<std::vector<LieMonomial>> enumerate_pcls(const GeneratorOrder& o,
                                                     const CommutationGraph& g,
                                                     int dmax) {
  if (dmax < 1) throw Error("enumerate_pcls: degree bound must be positive");
  if (o.size() != g.size())
    throw Error("generator order does not match the graph");
  std::vector<std::vector<LieMonomial>> out;
  out.reserve(static_cast<std::size_t>(dmax));
  for (int n = 1; n <= dmax; ++n) {
    std::vector<LieMonomial> level;
    for (const Word& w : enumerate_lsa(o, n)) {
      LieMonomial m = bracket_word(o, w);
      if (is_pcls(o, g, m)) level.push_back(std::move(m));
    }
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace pcla
