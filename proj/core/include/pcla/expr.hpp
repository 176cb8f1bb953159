#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "pcla/element.hpp"
#include "pcla/free_lie.hpp"
#include "pcla/graph.hpp"
#include "pcla/reduction.hpp"

namespace pcla {

/// Input-language AST for algebra elements:
///   EXPR := TERM (('+'|'-') TERM)*
///   TERM := RAT? ATOM | '0'
///   ATOM := NAME | '[' EXPR ',' EXPR ']' | '(' EXPR ')'
///   RAT  := integer ('/' positive-integer)? followed by an optional '*'
/// '[a,b]' denotes the Lie product.  A bare '0' denotes the zero element.
class LieExpression {
public:
  struct GeneratorRef {
    int index;
  };
  struct Zero {};
  struct Scale {
    Scalar factor;
    std::shared_ptr<const LieExpression> operand;
  };
  struct Sum {
    std::shared_ptr<const LieExpression> left, right;
  };
  struct Difference {
    std::shared_ptr<const LieExpression> left, right;
  };
  struct Bracket {
    std::shared_ptr<const LieExpression> left, right;
  };
  using Node = std::variant<GeneratorRef, Zero, Scale, Sum, Difference, Bracket>;

  explicit LieExpression(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

  static std::shared_ptr<const LieExpression> generator(int index);
  static std::shared_ptr<const LieExpression> zero();
  static std::shared_ptr<const LieExpression> scale(
      Scalar factor, std::shared_ptr<const LieExpression> e);
  static std::shared_ptr<const LieExpression> sum(
      std::shared_ptr<const LieExpression> a,
      std::shared_ptr<const LieExpression> b);
  static std::shared_ptr<const LieExpression> difference(
      std::shared_ptr<const LieExpression> a,
      std::shared_ptr<const LieExpression> b);
  static std::shared_ptr<const LieExpression> bracket(
      std::shared_ptr<const LieExpression> a,
      std::shared_ptr<const LieExpression> b);

private:
  Node node_;
};

using ExprPtr = std::shared_ptr<const LieExpression>;

/// Parses the expression grammar above.  Unknown identifiers and syntax
/// errors raise ParseError with a character position.
ExprPtr parse_expr(std::string_view text, const CommutationGraph& g);

/// Largest monomial degree the expression can produce.
int expression_degree(const LieExpression& e);

/// Evaluates in the free algebra: brackets expand innermost-first over the
/// LS basis.  The result is LS-form.
LieElement evaluate_free(const LieExpression& e, const GeneratorOrder& o,
                         FreeBracketCache& cache);

/// Evaluation followed by reduction through the table.
LieElement normal_form(const ReductionTable& t, const LieExpression& e);
LieElement normal_form(const ReductionTable& t, const LieExpression& e,
                       FreeBracketCache& cache);

}  // namespace pcla
