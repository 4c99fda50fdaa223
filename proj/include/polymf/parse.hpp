#ifndef POLYMF_PARSE_HPP
#define POLYMF_PARSE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "polymf/polynomial.hpp"
#include "polymf/rational_function.hpp"

namespace polymf {

/*
 * Expression grammar shared by the library and the CLI:
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := ('+' | '-') unary | power
 *   power   := primary ('^' integer)?
 *   primary := integer | identifier | '(' expr ')'
 *
 * Identifiers match [a-zA-Z][a-zA-Z0-9_]*. Multiplication is explicit.
 * Rational literals such as 5/7 are divisions of integer literals.
 */
struct ExprNode {
    enum class Kind { Number, Variable, Negate, Add, Subtract, Multiply, Divide, Power };

    Kind kind = Kind::Number;
    std::size_t position = 0;
    Rational value;           // Number
    std::string name;         // Variable
    std::uint32_t exponent = 0;  // Power
    std::unique_ptr<ExprNode> lhs;
    std::unique_ptr<ExprNode> rhs;
};

/// Syntax only; variables are not resolved.
std::unique_ptr<ExprNode> parse_expression(std::string_view text);

/// Identifiers in order of first appearance.
std::vector<std::string> scan_variables(std::string_view text);

/// Context whose ordering is the first appearance of each variable across the texts.
ContextPtr context_from_texts(const std::vector<std::string>& texts);

/// Division is permitted only by nonzero constants.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& context);

/// General quotients allowed, e.g. "(x^2 + y^2)/x".
RationalFunction parse_rational_function(std::string_view text, const ContextPtr& context);

Polynomial evaluate_polynomial(const ExprNode& node, const ContextPtr& context);
RationalFunction evaluate_rational_function(const ExprNode& node, const ContextPtr& context);

}  // namespace polymf

#endif  // POLYMF_PARSE_HPP
