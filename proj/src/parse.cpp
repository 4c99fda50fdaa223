#include "polymf/parse.hpp"

#include <cctype>
#include <unordered_set>

#include "polymf/errors.hpp"

namespace polymf {

namespace {

constexpr std::uint32_t kMaxExponent = 65535;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<ExprNode> parse() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        auto node = expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return node;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static std::unique_ptr<ExprNode> binary(ExprNode::Kind kind, std::size_t at,
                                            std::unique_ptr<ExprNode> l, std::unique_ptr<ExprNode> r) {
        auto n = std::make_unique<ExprNode>();
        n->kind = kind;
        n->position = at;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    std::unique_ptr<ExprNode> expr() {
        auto node = term();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('+')) {
                node = binary(ExprNode::Kind::Add, at, std::move(node), term());
            } else if (accept('-')) {
                node = binary(ExprNode::Kind::Subtract, at, std::move(node), term());
            } else {
                return node;
            }
        }
    }

    std::unique_ptr<ExprNode> term() {
        auto node = unary();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('*')) {
                node = binary(ExprNode::Kind::Multiply, at, std::move(node), unary());
            } else if (accept('/')) {
                node = binary(ExprNode::Kind::Divide, at, std::move(node), unary());
            } else {
                return node;
            }
        }
    }

    std::unique_ptr<ExprNode> unary() {
        skip_space();
        const std::size_t at = pos_;
        if (accept('-')) {
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Kind::Negate;
            n->position = at;
            n->lhs = unary();
            return n;
        }
        if (accept('+')) return unary();
        return power();
    }

    std::unique_ptr<ExprNode> power() {
        auto base = primary();
        skip_space();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        skip_space();
        const std::size_t digits_at = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_++];
        }
        if (digits.empty()) throw ParseError("expected integer exponent after '^'", digits_at);
        if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
            throw ParseError("exponent too large", digits_at);
        }
        auto n = std::make_unique<ExprNode>();
        n->kind = ExprNode::Kind::Power;
        n->position = at;
        n->exponent = static_cast<std::uint32_t>(std::stoul(digits));
        n->lhs = std::move(base);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            throw ParseError("chained exponent; use parentheses", pos_);
        }
        return n;
    }

    std::unique_ptr<ExprNode> primary() {
        skip_space();
        const std::size_t at = pos_;
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_++];
            }
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Kind::Number;
            n->position = at;
            n->value = Rational(mpz_class(digits));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_++];
            }
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Kind::Variable;
            n->position = at;
            n->name = std::move(id);
            return n;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void collect_variables(const ExprNode& n, std::vector<std::string>& out,
                       std::unordered_set<std::string>& seen) {
    if (n.kind == ExprNode::Kind::Variable) {
        if (seen.insert(n.name).second) out.push_back(n.name);
        return;
    }
    if (n.lhs) collect_variables(*n.lhs, out, seen);
    if (n.rhs) collect_variables(*n.rhs, out, seen);
}

Polynomial resolve_variable(const ExprNode& n, const ContextPtr& ctx) {
    auto idx = ctx ? ctx->find(n.name) : std::nullopt;
    if (!idx) throw UnknownVariableError(n.name, n.position);
    return Polynomial::variable(ctx, *idx);
}

}  // namespace

std::unique_ptr<ExprNode> parse_expression(std::string_view text) { return Parser(text).parse(); }

std::vector<std::string> scan_variables(std::string_view text) {
    auto root = parse_expression(text);
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    collect_variables(*root, out, seen);
    return out;
}

ContextPtr context_from_texts(const std::vector<std::string>& texts) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const auto& t : texts) {
        auto root = parse_expression(t);
        collect_variables(*root, out, seen);
    }
    return VariableContext::make(std::move(out));
}

Polynomial evaluate_polynomial(const ExprNode& n, const ContextPtr& ctx) {
    using K = ExprNode::Kind;
    switch (n.kind) {
        case K::Number: return Polynomial(n.value).embed(ctx);
        case K::Variable: return resolve_variable(n, ctx);
        case K::Negate: return -evaluate_polynomial(*n.lhs, ctx);
        case K::Add: return evaluate_polynomial(*n.lhs, ctx) + evaluate_polynomial(*n.rhs, ctx);
        case K::Subtract: return evaluate_polynomial(*n.lhs, ctx) - evaluate_polynomial(*n.rhs, ctx);
        case K::Multiply: return evaluate_polynomial(*n.lhs, ctx) * evaluate_polynomial(*n.rhs, ctx);
        case K::Divide: {
            Polynomial divisor = evaluate_polynomial(*n.rhs, ctx);
            if (divisor.is_zero()) throw ParseError("division by zero", n.position);
            if (!divisor.is_constant()) {
                throw ParseError("division by a non-constant in a polynomial", n.position);
            }
            return evaluate_polynomial(*n.lhs, ctx).scaled(1 / divisor.leading_coefficient());
        }
        case K::Power: return evaluate_polynomial(*n.lhs, ctx).pow(n.exponent);
    }
    throw ParseError("malformed expression", n.position);
}

RationalFunction evaluate_rational_function(const ExprNode& n, const ContextPtr& ctx) {
    using K = ExprNode::Kind;
    switch (n.kind) {
        case K::Number:
        case K::Variable: return RationalFunction(evaluate_polynomial(n, ctx));
        case K::Negate: return -evaluate_rational_function(*n.lhs, ctx);
        case K::Add:
            return evaluate_rational_function(*n.lhs, ctx) + evaluate_rational_function(*n.rhs, ctx);
        case K::Subtract:
            return evaluate_rational_function(*n.lhs, ctx) - evaluate_rational_function(*n.rhs, ctx);
        case K::Multiply:
            return evaluate_rational_function(*n.lhs, ctx) * evaluate_rational_function(*n.rhs, ctx);
        case K::Divide: {
            RationalFunction divisor = evaluate_rational_function(*n.rhs, ctx);
            if (divisor.is_zero()) throw ParseError("division by zero", n.position);
            return evaluate_rational_function(*n.lhs, ctx) / divisor;
        }
        case K::Power: {
            RationalFunction base = evaluate_rational_function(*n.lhs, ctx);
            return RationalFunction::make(base.numerator().pow(n.exponent),
                                          base.denominator().pow(n.exponent));
        }
    }
    throw ParseError("malformed expression", n.position);
}

Polynomial parse_polynomial(std::string_view text, const ContextPtr& context) {
    return evaluate_polynomial(*parse_expression(text), context);
}

RationalFunction parse_rational_function(std::string_view text, const ContextPtr& context) {
    return evaluate_rational_function(*parse_expression(text), context);
}

}  // namespace polymf
