#ifndef POLYMF_RATIONAL_FUNCTION_HPP
#define POLYMF_RATIONAL_FUNCTION_HPP

#include <ostream>
#include <string>

#include "polymf/polynomial.hpp"

namespace polymf {

/*
 * Element of the fraction field Q(x_1, ..., x_n) in canonical form:
 * numerator and denominator coprime, denominator monic under graded-lex,
 * zero stored as 0/1. Canonicity makes equality structural.
 */
class RationalFunction {
public:
    RationalFunction() : den_(1L) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial(1L).embed(num_.context())) {}  // NOLINT
    RationalFunction(const Rational& q) : RationalFunction(Polynomial(q)) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(Polynomial(c)) {}             // NOLINT
    RationalFunction(int c) : RationalFunction(Polynomial(c)) {}              // NOLINT

    /// Reduced quotient num/den; throws DivisionByZeroError when den = 0.
    static RationalFunction make(const Polynomial& num, const Polynomial& den);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    ContextPtr context() const { return num_.context() ? num_.context() : den_.context(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction embed(const ContextPtr& target) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// "num" when the denominator is 1, otherwise "num/den" with parentheses
    /// where needed so that the text parses back to the same value.
    std::string to_string() const;

private:
    RationalFunction(Polynomial num, Polynomial den, bool /*already canonical*/)
        : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

}  // namespace polymf

#endif  // POLYMF_RATIONAL_FUNCTION_HPP
