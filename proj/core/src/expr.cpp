#include "pcla/expr.hpp"

#include <cctype>

namespace pcla {

std::shared_ptr<const LieExpression> LieExpression::generator(int index) {
  return std::make_shared<LieExpression>(Node{GeneratorRef{index}});
}
std::shared_ptr<const LieExpression> LieExpression::zero() {
  return std::make_shared<LieExpression>(Node{Zero{}});
}
std::shared_ptr<const LieExpression> LieExpression::scale(Scalar factor,
                                                          ExprPtr e) {
  return std::make_shared<LieExpression>(Node{Scale{std::move(factor), std::move(e)}});
}
std::shared_ptr<const LieExpression> LieExpression::sum(ExprPtr a, ExprPtr b) {
  return std::make_shared<LieExpression>(Node{Sum{std::move(a), std::move(b)}});
}
std::shared_ptr<const LieExpression> LieExpression::difference(ExprPtr a,
                                                               ExprPtr b) {
  return std::make_shared<LieExpression>(Node{Difference{std::move(a), std::move(b)}});
}
std::shared_ptr<const LieExpression> LieExpression::bracket(ExprPtr a,
                                                            ExprPtr b) {
  return std::make_shared<LieExpression>(Node{Bracket{std::move(a), std::move(b)}});
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const CommutationGraph& g)
      : text_(text), graph_(g) {}

  ExprPtr parse() {
    ExprPtr e = parse_expression();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c, const char* what) {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(what);
    ++pos_;
  }

  ExprPtr parse_expression() {
    ExprPtr e = parse_term();
    while (true) {
      skip_spaces();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c == '+') {
        ++pos_;
        e = LieExpression::sum(e, parse_term());
      } else if (c == '-') {
        ++pos_;
        e = LieExpression::difference(e, parse_term());
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_term() {
    skip_spaces();
    if (pos_ >= text_.size()) fail("expected a term");
    const char c = text_[pos_];
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      const Scalar factor = parse_rational();
      skip_spaces();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_spaces();
      }
      if (at_atom_start()) return LieExpression::scale(factor, parse_atom());
      // A bare number is only legal for the zero element.
      if (is_zero(factor)) return LieExpression::zero();
      fail("expected a generator or bracket after the coefficient");
    }
    return parse_atom();
  }

  bool at_atom_start() {
    skip_spaces();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '[' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  ExprPtr parse_atom() {
    skip_spaces();
    if (pos_ >= text_.size()) fail("expected a generator or bracket");
    const char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      ExprPtr left = parse_expression();
      expect(',', "expected ',' inside the bracket");
      ExprPtr right = parse_expression();
      expect(']', "expected ']'");
      return LieExpression::bracket(std::move(left), std::move(right));
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expression();
      expect(')', "expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!graph_.has_generator(name)) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return LieExpression::generator(graph_.index_of(name));
    }
    fail("expected a generator or bracket");
  }

  Scalar parse_rational() {
    skip_spaces();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_spaces();
    }
    const Integer num = parse_digits("expected digits");
    Integer den(1);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = parse_digits("expected digits after '/'");
      if (sgn(den) == 0) fail("zero denominator");
    }
    Scalar s = make_scalar(negative ? Integer(-num) : num, den);
    return s;
  }

  Integer parse_digits(const char* what) {
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(what);
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const CommutationGraph& graph_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text, const CommutationGraph& g) {
  return Parser(text, g).parse();
}

int expression_degree(const LieExpression& e) {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LieExpression::GeneratorRef>) {
          return 1;
        } else if constexpr (std::is_same_v<T, LieExpression::Zero>) {
          return 0;
        } else if constexpr (std::is_same_v<T, LieExpression::Scale>) {
          return expression_degree(*node.operand);
        } else if constexpr (std::is_same_v<T, LieExpression::Bracket>) {
          return expression_degree(*node.left) + expression_degree(*node.right);
        } else {
          return std::max(expression_degree(*node.left),
                          expression_degree(*node.right));
        }
      },
      e.node());
}

LieElement evaluate_free(const LieExpression& e, const GeneratorOrder& o,
                         FreeBracketCache& cache) {
  return std::visit(
      [&](const auto& node) -> LieElement {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LieExpression::GeneratorRef>) {
          return LieElement::monomial(o, ElementForm::ls,
                                      LieMonomial::leaf(node.index));
        } else if constexpr (std::is_same_v<T, LieExpression::Zero>) {
          return LieElement::zero(o, ElementForm::ls);
        } else if constexpr (std::is_same_v<T, LieExpression::Scale>) {
          return evaluate_free(*node.operand, o, cache).scaled(node.factor);
        } else if constexpr (std::is_same_v<T, LieExpression::Sum>) {
          return evaluate_free(*node.left, o, cache) +
                 evaluate_free(*node.right, o, cache);
        } else if constexpr (std::is_same_v<T, LieExpression::Difference>) {
          return evaluate_free(*node.left, o, cache) -
                 evaluate_free(*node.right, o, cache);
        } else {
          return free_bracket_elements(evaluate_free(*node.left, o, cache),
                                       evaluate_free(*node.right, o, cache),
                                       cache);
        }
      },
      e.node());
}

LieElement normal_form(const ReductionTable& t, const LieExpression& e,
                       FreeBracketCache& cache) {
  const int deg = expression_degree(e);
  if (deg > t.degree_bound())
    throw DegreeError("expression degree exceeds the reduction table bound",
                      deg);
  return normal_form(t, evaluate_free(e, t.order(), cache));
}

LieElement normal_form(const ReductionTable& t, const LieExpression& e) {
  FreeBracketCache cache;
  return normal_form(t, e, cache);
}

}  // namespace pcla
