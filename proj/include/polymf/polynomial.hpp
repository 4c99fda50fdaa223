#ifndef POLYMF_POLYNOMIAL_HPP
#define POLYMF_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace polymf {

using Rational = mpq_class;

/*
 * Ordered list of variable names. Position in the list is the variable's
 * index and fixes the monomial order: index 0 is the most significant
 * variable under graded-lex. Contexts are immutable and shared by pointer.
 */
class VariableContext {
public:
    static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;

    bool operator==(const VariableContext& other) const { return names_ == other.names_; }

private:
    explicit VariableContext(std::vector<std::string> names);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

/// True when the identifier matches [a-zA-Z][a-zA-Z0-9_]*.
bool is_identifier(std::string_view name);

/// Context with the variables of `a` followed by the variables of `b` not already in `a`.
ContextPtr merge_contexts(const ContextPtr& a, const ContextPtr& b);

/// Contexts are compatible when either is absent or both list the same names.
bool compatible(const ContextPtr& a, const ContextPtr& b);

/// Returns whichever context is present; throws ContextError if they disagree.
ContextPtr unify_contexts(const ContextPtr& a, const ContextPtr& b);

/*
 * Exponent vector indexed by variable position. Trailing zeros are trimmed
 * so that equal monomials compare equal regardless of context size; the
 * empty vector is the monomial 1.
 */
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial variable(std::size_t index, std::uint32_t power = 1);

    std::uint32_t exponent(std::size_t index) const noexcept {
        return index < exps_.size() ? exps_[index] : 0;
    }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::size_t width() const noexcept { return exps_.size(); }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return exps_.empty(); }

    /// Number of variables with nonzero exponent.
    std::size_t support_size() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    Monomial operator*(const Monomial& other) const;
    /// Requires divides(other) to hold for `divisor`.
    Monomial operator/(const Monomial& divisor) const;

    /// Exponent-wise minimum.
    static Monomial gcd(const Monomial& a, const Monomial& b);

    /// Same monomial with the exponent of `index` set to zero.
    Monomial without(std::size_t index) const;

    bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const noexcept { return !(*this == other); }

private:
    void trim();

    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

/// Graded-lex: higher total degree first, ties broken lexicographically by index.
int grlex_compare(const Monomial& a, const Monomial& b) noexcept;

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return grlex_compare(a, b) > 0;
    }
};

/*
 * Sparse multivariate polynomial with exact rational coefficients.
 *
 * Terms are kept in descending graded-lex order with no zero coefficients.
 * A polynomial without a context is necessarily constant; it combines with
 * polynomials of any context.
 */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant);             // NOLINT(google-explicit-constructor)
    Polynomial(int constant) : Polynomial(static_cast<long>(constant)) {}  // NOLINT

    static Polynomial variable(ContextPtr context, std::size_t index);
    static Polynomial variable(ContextPtr context, std::string_view name);
    static Polynomial term(ContextPtr context, Monomial monomial, Rational coefficient);

    const ContextPtr& context() const noexcept { return ctx_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const noexcept;
    /// Highest power of the variable; -1 for the zero polynomial.
    long degree_in(std::size_t index) const noexcept;
    /// Coefficient of var^k, as a polynomial free of that variable.
    Polynomial coefficient_in(std::size_t index, std::uint32_t power) const;
    /// Indices of variables that actually occur.
    std::vector<std::size_t> support() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    /// Scaled so the graded-lex leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;

    /// Same polynomial over another context; every occurring variable must be named there.
    Polynomial embed(const ContextPtr& target) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& factor) const;
    Polynomial times_monomial(const Monomial& monomial, const Rational& coefficient) const;
    Polynomial pow(unsigned exponent) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Canonical text, e.g. "x^2*y - 2/3*x + 1".
    std::string to_string() const;

private:
    void add_term(const Monomial& monomial, const Rational& coefficient);
    void subtract_scaled(const Polynomial& other, const Monomial& shift, const Rational& factor);

    friend std::optional<Polynomial> divide_exact(const Polynomial&, const Polynomial&);

    ContextPtr ctx_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

std::string format_rational(const Rational& q);

/// Quotient a / b if b divides a exactly, std::nullopt otherwise. Throws on b = 0.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Like divide_exact, but a nonzero remainder is an Error.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b with respect to the given variable.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

/// Monic gcd of the coefficients of p viewed as a polynomial in `var`.
Polynomial content_in(const Polynomial& p, std::size_t var);

}  // namespace polymf

#endif  // POLYMF_POLYNOMIAL_HPP
