#ifndef UQ_EXPRESSION_HPP
#define UQ_EXPRESSION_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace uq {

namespace detail {
struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;
}

/// Parsed analytical expression over a fixed, ordered list of input names.
///
/// Grammar: left-associative + - * /, right-associative ^, unary minus binding
/// below ^ (so "-x^2" is -(x^2)), parentheses, and the function set
/// {sin, cos, tan, exp, log, sqrt, abs, tanh, min, max}.
class Expression {
public:
    Expression() = default;

    /// Parse `text` against the ordered variable list. Throws ParseError with
    /// the offending position, or InvalidArgument for unknown identifiers,
    /// unknown functions and arity mismatches.
    static Expression parse(const std::string& text,
                            const std::vector<std::string>& input_names);

    /// Constant expression (no variables).
    static Expression constant(double value,
                               const std::vector<std::string>& input_names = {});

    double evaluate(std::span<const double> x) const;

    /// Partial derivative with respect to input `index`, with constant folding.
    /// Throws EvaluationError on non-differentiable nodes (abs, min, max).
    Expression derivative(std::size_t index) const;

    /// All partial derivatives, in input order.
    std::vector<Expression> gradient() const;

    /// Parenthesized textual form that parses back to an equivalent tree.
    std::string to_string() const;

    const std::vector<std::string>& input_names() const { return input_names_; }
    bool valid() const { return static_cast<bool>(root_); }

private:
    Expression(detail::ExprNodePtr root, std::vector<std::string> names)
        : root_(std::move(root)), input_names_(std::move(names)) {}

    detail::ExprNodePtr root_;
    std::vector<std::string> input_names_;
};

} // namespace uq

#endif
