#include "polymf/mf2.hpp"

#include "polymf/errors.hpp"
#include "polymf/parse.hpp"

namespace polymf {

std::string CertificateReport::describe() const {
    if (ok) return "PASS";
    return "entry (" + std::to_string(row) + ", " + std::to_string(col) + ") is " + actual.to_string() +
           ", expected " + expected.to_string();
}

CertificateReport check_scalar_identity(const RatMatrix& product, const Polynomial& f) {
    CertificateReport report;
    const RationalFunction diag(f);
    const RationalFunction zero;
    for (std::size_t i = 0; i < product.rows(); ++i) {
        for (std::size_t j = 0; j < product.cols(); ++j) {
            const RationalFunction& want = (i == j) ? diag : zero;
            if (product(i, j) != want) {
                report.ok = false;
                report.row = i;
                report.col = j;
                report.expected = want;
                report.actual = product(i, j);
                return report;
            }
        }
    }
    return report;
}

void require_certificate(const CertificateReport& report, const std::string& what) {
    if (!report.ok) throw CertificateError(what + " certificate failed: " + report.describe(), report.row, report.col);
}

MF2 MF2::certify(RatMatrix p, RatMatrix q, Polynomial f) {
    if (!p.is_square() || !q.is_square() || p.rows() != q.rows()) {
        throw DimensionError("MF2 factors must be square of equal size");
    }
    require_certificate(check_scalar_identity(p * q, f), "P*Q = f*I");
    return MF2(std::move(p), std::move(q), std::move(f));
}

MF2 yoshino_add(const MF2& x1, const MF2& x2) {
    const std::size_t n1 = x1.size();
    const std::size_t n2 = x2.size();
    const RatMatrix i1 = RatMatrix::identity(n1);
    const RatMatrix i2 = RatMatrix::identity(n2);
    const std::size_t h = n1 * n2;

    const RatMatrix p1 = kron(x1.p(), i2);
    const RatMatrix q1 = kron(x1.q(), i2);
    const RatMatrix p2 = kron(i1, x2.p());
    const RatMatrix q2 = kron(i1, x2.q());

    RatMatrix p(2 * h, 2 * h);
    RatMatrix q(2 * h, 2 * h);
    auto place = [h](RatMatrix& dst, std::size_t bi, std::size_t bj, const RatMatrix& block, bool negate) {
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t j = 0; j < h; ++j) {
                dst(bi * h + i, bj * h + j) = negate ? -block(i, j) : block(i, j);
            }
        }
    };
    place(p, 0, 0, p1, false);
    place(p, 0, 1, p2, true);
    place(p, 1, 0, q2, false);
    place(p, 1, 1, q1, false);
    place(q, 0, 0, q1, false);
    place(q, 0, 1, p2, false);
    place(q, 1, 0, q2, true);
    place(q, 1, 1, p1, false);
    return MF2::certify(std::move(p), std::move(q), x1.target() + x2.target());
}

TermSplit default_split(const Polynomial& single_term) {
    if (single_term.term_count() > 1) throw Error("default_split expects a single term");
    const ContextPtr& ctx = single_term.context();
    if (single_term.is_constant()) return {single_term, Polynomial(1L)};

    const Monomial& m = single_term.leading_monomial();
    const Rational& c = single_term.leading_coefficient();
    std::size_t first = 0;
    while (m.exponent(first) == 0) ++first;
    const std::uint32_t e = m.exponent(first);

    if (m.support_size() >= 2) {
        return {Polynomial::term(ctx, Monomial::variable(first, e), c),
                Polynomial::term(ctx, m.without(first), Rational(1))};
    }
    if (e >= 2) {
        return {Polynomial::term(ctx, Monomial::variable(first, 1), c),
                Polynomial::term(ctx, Monomial::variable(first, e - 1), Rational(1))};
    }
    return {single_term, Polynomial(1L).embed(ctx)};
}

std::vector<TermSplit> default_splits(const Polynomial& f) {
    std::vector<TermSplit> out;
    for (const auto& [m, c] : f.terms()) out.push_back(default_split(Polynomial::term(f.context(), m, c)));
    return out;
}

namespace {

void flatten_sum(const ExprNode& n, bool negative, std::vector<std::pair<const ExprNode*, bool>>& out) {
    if (n.kind == ExprNode::Kind::Add) {
        flatten_sum(*n.lhs, negative, out);
        flatten_sum(*n.rhs, negative, out);
    } else if (n.kind == ExprNode::Kind::Subtract) {
        flatten_sum(*n.lhs, negative, out);
        flatten_sum(*n.rhs, !negative, out);
    } else {
        out.emplace_back(&n, negative);
    }
}

void flatten_product(const ExprNode& n, std::vector<const ExprNode*>& out) {
    if (n.kind == ExprNode::Kind::Multiply) {
        flatten_product(*n.lhs, out);
        flatten_product(*n.rhs, out);
    } else {
        out.push_back(&n);
    }
}

}  // namespace

std::vector<TermSplit> splits_from_expression(std::string_view text, const ContextPtr& context) {
    const auto root = parse_expression(text);
    std::vector<std::pair<const ExprNode*, bool>> summands;
    flatten_sum(*root, false, summands);

    std::vector<TermSplit> out;
    for (auto [node, negative] : summands) {
        while (node->kind == ExprNode::Kind::Negate) {
            negative = !negative;
            node = node->lhs.get();
        }
        std::vector<const ExprNode*> factors;
        flatten_product(*node, factors);

        TermSplit split;
        if (factors.size() >= 2) {
            split.left = Polynomial(1L).embed(context);
            for (std::size_t i = 0; i + 1 < factors.size(); ++i) split.left *= evaluate_polynomial(*factors[i], context);
            split.right = evaluate_polynomial(*factors.back(), context);
        } else if (node->kind == ExprNode::Kind::Power && node->exponent >= 2) {
            split.left = evaluate_polynomial(*node->lhs, context);
            split.right = split.left.pow(node->exponent - 1);
        } else {
            split.left = evaluate_polynomial(*node, context);
            split.right = Polynomial(1L).embed(context);
        }
        if (negative) split.left = -split.left;
        out.push_back(std::move(split));
    }
    return out;
}

MF2 standard_method(const Polynomial& f, const std::optional<std::vector<TermSplit>>& splits) {
    std::vector<TermSplit> parts;
    if (splits) {
        parts = *splits;
        if (parts.empty()) throw Error("standard method needs at least one summand");
        Polynomial sum = Polynomial(0L).embed(f.context());
        for (const auto& s : parts) sum += s.product();
        if (sum != f) {
            throw TargetMismatchError("summands add up to " + sum.to_string() + ", not " + f.to_string());
        }
    } else {
        if (f.is_zero()) throw Error("standard method of the zero polynomial; use mf2_from_pair([0], [1], 0)");
        parts = default_splits(f);
    }

    auto base = [](const TermSplit& s) {
        return MF2::certify(RatMatrix{{RationalFunction(s.left)}}, RatMatrix{{RationalFunction(s.right)}},
                            s.product());
    };
    MF2 acc = base(parts.front());
    for (std::size_t k = 1; k < parts.size(); ++k) acc = yoshino_add(acc, base(parts[k]));
    return acc;
}

}  // namespace polymf
