#ifndef POLYMF_TESTS_SUPPORT_HPP
#define POLYMF_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "polymf/matrix.hpp"
#include "polymf/parse.hpp"
#include "polymf/polynomial.hpp"
#include "polymf/rational_function.hpp"

namespace testing {

using namespace polymf;

inline ContextPtr vars(std::vector<std::string> names) { return VariableContext::make(std::move(names)); }

inline Polynomial poly(const std::string& text, const ContextPtr& ctx) { return parse_polynomial(text, ctx); }

inline RationalFunction rf(const std::string& text, const ContextPtr& ctx) { return parse_rational_function(text, ctx); }

inline RatMatrix mat(const std::vector<std::vector<std::string>>& rows, const ContextPtr& ctx) {
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rf(rows[i][j], ctx);
    }
    return m;
}

// Value at a point, computed term by term.
inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    Rational total = 0;
    for (const auto& [mono, c] : p.terms()) {
        Rational t = c;
        for (std::size_t j = 0; j < mono.width(); ++j) {
            for (std::uint32_t e = 0; e < mono.exponent(j); ++e) t *= point.at(j);
        }
        total += t;
    }
    return total;
}

struct Random {
    explicit Random(std::uint64_t seed) : engine(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(engine() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Polynomial polynomial(const ContextPtr& ctx, std::size_t max_terms, unsigned max_degree) {
        Polynomial p;
        const std::size_t terms = 1 + static_cast<std::size_t>(integer(0, static_cast<long>(max_terms) - 1));
        for (std::size_t t = 0; t < terms; ++t) {
            std::vector<std::uint32_t> e(ctx->size(), 0);
            const long deg = integer(0, max_degree);
            for (long d = 0; d < deg; ++d) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(ctx->size()) - 1))];
            long c = integer(-4, 4);
            if (c == 0) c = 1;
            Rational q(c, integer(1, 3));
            q.canonicalize();
            p += Polynomial::term(ctx, Monomial(e), q);
        }
        return p.embed(ctx);
    }

    Polynomial nonzero_polynomial(const ContextPtr& ctx, std::size_t max_terms, unsigned max_degree) {
        for (;;) {
            Polynomial p = polynomial(ctx, max_terms, max_degree);
            if (!p.is_zero()) return p;
        }
    }

    std::vector<Rational> point(std::size_t n) {
        std::vector<Rational> pt;
        for (std::size_t i = 0; i < n; ++i) {
            Rational q(integer(-9, 9), integer(1, 5));
            q.canonicalize();
            pt.push_back(q);
        }
        return pt;
    }

    std::mt19937_64 engine;
};

// Naive product, independent of RatMatrix::operator*.
inline RatMatrix naive_product(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RationalFunction s;
            for (std::size_t k = 0; k < a.cols(); ++k) s = s + a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}

inline RatMatrix scalar_identity(std::size_t n, const Polynomial& f) { return RatMatrix::scalar(n, RationalFunction(f)); }

}  // namespace testing

#endif  // POLYMF_TESTS_SUPPORT_HPP
