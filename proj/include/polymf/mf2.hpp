#ifndef POLYMF_MF2_HPP
#define POLYMF_MF2_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymf/matrix.hpp"
#include "polymf/polynomial.hpp"

namespace polymf {

/// Result of comparing a square matrix against f * I.
struct CertificateReport {
    bool ok = true;
    std::size_t row = 0;
    std::size_t col = 0;
    RationalFunction expected;
    RationalFunction actual;

    std::string describe() const;
};

CertificateReport check_scalar_identity(const RatMatrix& product, const Polynomial& f);

/// Throws CertificateError built from a failing report.
void require_certificate(const CertificateReport& report, const std::string& what);

/// A pair (P, Q) of square matrices with P * Q = f * I.
class MF2 {
public:
    /// Certifies P * Q = f * I; throws CertificateError naming the first bad entry.
    static MF2 certify(RatMatrix p, RatMatrix q, Polynomial f);

    const RatMatrix& p() const noexcept { return p_; }
    const RatMatrix& q() const noexcept { return q_; }
    const Polynomial& target() const noexcept { return f_; }
    std::size_t size() const noexcept { return p_.rows(); }

private:
    MF2(RatMatrix p, RatMatrix q, Polynomial f) : p_(std::move(p)), q_(std::move(q)), f_(std::move(f)) {}

    RatMatrix p_;
    RatMatrix q_;
    Polynomial f_;
};

inline MF2 mf2_from_pair(RatMatrix p, RatMatrix q, Polynomial f) {
    return MF2::certify(std::move(p), std::move(q), std::move(f));
}

/// One summand left * right of a sum-of-products presentation.
struct TermSplit {
    Polynomial left;
    Polynomial right;

    Polynomial product() const { return left * right; }
};

/*
 * Block sum of factorizations: for (P1, Q1) of f1 (size n1) and (P2, Q2)
 * of f2 (size n2) returns the size 2*n1*n2 factorization of f1 + f2
 *
 *   P = [[P1 (x) I, -I (x) P2], [ I (x) Q2, Q1 (x) I]]
 *   Q = [[Q1 (x) I,  I (x) P2], [-I (x) Q2, P1 (x) I]]
 */
MF2 yoshino_add(const MF2& x1, const MF2& x2);

/*
 * Default split of c*m: a monomial in several variables gives
 * (c * v^e, rest) for the first occurring variable v; a pure power
 * c*v^e with e >= 2 gives (c*v, v^(e-1)); anything else (c*m, 1).
 */
TermSplit default_split(const Polynomial& single_term);

/// The default split of every term of f, in graded-lex order.
std::vector<TermSplit> default_splits(const Polynomial& f);

/*
 * Splits read off the written product structure of an expression. Each
 * top-level summand a_1 * ... * a_k (k >= 2) becomes (a_1 * ... * a_{k-1}, a_k);
 * a lone power b^e (e >= 2) becomes (b, b^(e-1)); any other lone factor u
 * becomes (u, 1). Leading minus signs go to the left part.
 */
std::vector<TermSplit> splits_from_expression(std::string_view text, const ContextPtr& context);

/*
 * Folds the summands with yoshino_add starting from the 1x1 factorization
 * ([left], [right]) of the first one. Size is 2^(k-1) for k summands.
 * Without explicit splits the terms of f are split by default_split.
 */
MF2 standard_method(const Polynomial& f, const std::optional<std::vector<TermSplit>>& splits = std::nullopt);

}  // namespace polymf

#endif  // POLYMF_MF2_HPP
