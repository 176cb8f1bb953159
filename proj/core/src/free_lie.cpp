#include "pcla/free_lie.hpp"

namespace pcla {
namespace {

constexpr int kMaxDepth = 8192;

// a > b by word order, both LS.  Result in LS coordinates.
LieElement expand(const GeneratorOrder& o, const LieMonomial& a,
                  const LieMonomial& b, FreeBracketCache& cache, int depth);

// Any orientation; normalizes and dispatches.
LieElement bracket_ls(const GeneratorOrder& o, const LieMonomial& a,
                      const LieMonomial& b, FreeBracketCache& cache,
                      int depth) {
  if (depth > kMaxDepth)
    throw ConsistencyError("bracket rewriting recursion too deep");
  const auto cmp = compare_words(o, a.word(), b.word());
  if (cmp == std::strong_ordering::equal)
    return LieElement::zero(o, ElementForm::ls);
  if (cmp == std::strong_ordering::less)
    return expand(o, b, a, cache, depth).scaled(Scalar(-1));
  return expand(o, a, b, cache, depth);
}

LieElement expand(const GeneratorOrder& o, const LieMonomial& a,
                  const LieMonomial& b, FreeBracketCache& cache, int depth) {
  if (const LieElement* hit = cache.find(a.word(), b.word())) return *hit;

  LieElement result(o, ElementForm::ls);
  if (a.is_leaf() || compare_words(o, b.word(), a.right().word()) !=
                         std::strong_ordering::less) {
    // (a,b) already satisfies the standard-bracketing condition.
    result.add_term(LieMonomial::pair(a, b), Scalar(1));
  } else {
    // a = (p,q) with b < q: [(p,q),b] = [p,[q,b]] + [[p,b],q].
    const LieMonomial p = a.left();
    const LieMonomial q = a.right();
    const LieElement qb = bracket_ls(o, q, b, cache, depth + 1);
    qb.for_each_term([&](const LieMonomial& t, const Scalar& c) {
      result.add(bracket_ls(o, p, t, cache, depth + 1), c);
    });
    const LieElement pb = bracket_ls(o, p, b, cache, depth + 1);
    pb.for_each_term([&](const LieMonomial& s, const Scalar& c) {
      result.add(bracket_ls(o, s, q, cache, depth + 1), c);
    });
  }
  cache.store(a.word(), b.word(), result);
  return result;
}

}  // namespace

LieElement free_bracket(const GeneratorOrder& o, const LieMonomial& a,
                        const LieMonomial& b, FreeBracketCache& cache) {
  if (!is_ls(o, a) || !is_ls(o, b))
    throw Error("free_bracket: arguments must be LS monomials");
  return bracket_ls(o, a, b, cache, 0);
}

LieElement free_bracket(const GeneratorOrder& o, const LieMonomial& a,
                        const LieMonomial& b) {
  FreeBracketCache cache;
  return free_bracket(o, a, b, cache);
}

LieElement free_bracket_elements(const LieElement& a, const LieElement& b,
                                 FreeBracketCache& cache) {
  a.require_same_order(b);
  LieElement out(a.order(), ElementForm::ls);
  a.for_each_term([&](const LieMonomial& ma, const Scalar& ca) {
    b.for_each_term([&](const LieMonomial& mb, const Scalar& cb) {
      out.add(bracket_ls(a.order(), ma, mb, cache, 0), ca * cb);
    });
  });
  return out;
}

}  // namespace pcla
