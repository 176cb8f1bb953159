#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pcla/graph.hpp"
#include "pcla/scalar.hpp"
#include "pcla/words.hpp"

namespace pcla {

/// Which basis the term keys of an element live in.  Values in the free
/// algebra carry LS keys; fully reduced values carry admissible (PCLS) keys.
/// Reduced keys are a subset of LS keys, so `ls` is the weaker claim.
enum class ElementForm { ls, nf };

/// Finite linear combination of basis monomials with exact rational
/// coefficients, relative to a fixed generator order.  Terms are stored
/// descending by flattened word; zero coefficients are never kept.
class LieElement {
public:
  using Term = std::pair<LieMonomial, Scalar>;

  LieElement(GeneratorOrder order, ElementForm form)
      : order_(std::move(order)), form_(form), terms_(WordDesc{order_}) {}

  static LieElement zero(const GeneratorOrder& order, ElementForm form) {
    return LieElement(order, form);
  }

  static LieElement monomial(const GeneratorOrder& order, ElementForm form,
                             const LieMonomial& m, Scalar coeff = Scalar(1)) {
    LieElement e(order, form);
    e.add_term(m, coeff);
    return e;
  }

  const GeneratorOrder& order() const { return order_; }
  ElementForm form() const { return form_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Largest total degree among terms; 0 for the zero element.
  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Greatest term by word order.  Errors on zero.
  Term leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero");
    const auto& it = *terms_.begin();
    return {it.first, it.second};
  }

  /// Coefficient of a monomial (zero when absent).
  Scalar coefficient(const LieMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const LieMonomial& m, const Scalar& coeff) {
    if (pcla::is_zero(coeff)) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (pcla::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const LieElement& other, const Scalar& scale = Scalar(1)) {
    require_same_order(other);
    if (other.form_ == ElementForm::ls) form_ = ElementForm::ls;
    for (const auto& [m, c] : other.terms_) add_term(m, c * scale);
  }

  LieElement scaled(const Scalar& s) const {
    LieElement out(order_, form_);
    if (pcla::is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  LieElement operator+(const LieElement& other) const {
    LieElement out = *this;
    out.add(other);
    return out;
  }

  LieElement operator-(const LieElement& other) const {
    LieElement out = *this;
    out.add(other, Scalar(-1));
    return out;
  }

  bool operator==(const LieElement& other) const {
    if (order_ != other.order_ || terms_.size() != other.terms_.size())
      return false;
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
      if (!(a->first == b->first) || a->second != b->second) return false;
    return true;
  }

  /// Terms in descending word order.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, c);
    return out;
  }

  template <typename F>
  void for_each_term(F&& f) const {
    for (const auto& [m, c] : terms_) f(m, c);
  }

  void require_same_order(const LieElement& other) const {
    if (order_ != other.order_)
      throw Error("elements use different generator orders");
  }

private:
  struct WordDesc {
    GeneratorOrder order;
    bool operator()(const LieMonomial& a, const LieMonomial& b) const {
      // LS keys are unique per word, so word comparison is a total order here.
      return compare_words(order, a.word(), b.word()) ==
             std::strong_ordering::greater;
    }
  };

  GeneratorOrder order_;
  ElementForm form_;
  std::map<LieMonomial, Scalar, WordDesc> terms_;
};

/// Union of the supports of all terms.
GenSet support(const LieElement& g);

/// True iff all terms share one multidegree.  Zero is not homogeneous.
bool is_homogeneous(const LieElement& g);

/// Multidegree of a homogeneous element.  Errors otherwise.
Multidegree mdeg(const LieElement& g);

/// Terms grouped by multidegree; parts sum to the input and appear in
/// descending order of their leading words.
std::vector<std::pair<Multidegree, LieElement>> homogeneous_parts(
    const LieElement& g);

/// Splits a nonzero reduced element along the connected components of the
/// complement of the induced graph on its support.  Every term's support
/// falls inside exactly one component; a straddling term would contradict
/// the component decomposition and raises a ConsistencyError.
std::vector<std::pair<GenSet, LieElement>> component_split(
    const CommutationGraph& g, const LieElement& e);

}  // namespace pcla
