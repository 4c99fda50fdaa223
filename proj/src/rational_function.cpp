#include "polymf/rational_function.hpp"

#include "polymf/errors.hpp"

namespace polymf {

RationalFunction RationalFunction::make(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    const ContextPtr ctx = unify_contexts(num.context(), den.context());
    if (num.is_zero()) return RationalFunction(Polynomial(0L).embed(ctx));
    if (den.is_constant()) {
        return RationalFunction(num.scaled(1 / den.leading_coefficient()).embed(ctx));
    }
    const Polynomial g = poly_gcd(num, den);
    Polynomial n = g.is_one() ? num : exact_quotient(num, g);
    Polynomial d = g.is_one() ? den : exact_quotient(den, g);
    const Rational lc = d.leading_coefficient();
    if (lc != 1) {
        const Rational inv = 1 / lc;
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    if (d.is_one()) return RationalFunction(n.embed(ctx));
    return RationalFunction(n.embed(ctx), d.embed(ctx), true);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, true); }

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw DivisionByZeroError("inverse of zero rational function");
    const Rational inv = 1 / num_.leading_coefficient();
    Polynomial d = num_.scaled(inv);
    if (d.is_one()) return RationalFunction(den_.scaled(inv));
    return RationalFunction(den_.scaled(inv), std::move(d), true);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ + b.num_);
    if (b.is_polynomial()) {
        // a/d + c = (a + c*d)/d, already coprime with d
        return RationalFunction(a.num_ + b.num_ * a.den_, a.den_, true);
    }
    if (a.is_polynomial()) return RationalFunction(b.num_ + a.num_ * b.den_, b.den_, true);
    if (a.den_ == b.den_) return RationalFunction::make(a.num_ + b.num_, a.den_);

    const Polynomial g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
    }
    const Polynomial ad = exact_quotient(a.den_, g);
    const Polynomial bd = exact_quotient(b.den_, g);
    Polynomial num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return RationalFunction(std::move(num));
    const Polynomial t = poly_gcd(num, g);
    if (!t.is_one()) num = exact_quotient(num, t);
    Polynomial den = ad * bd * (t.is_one() ? g : exact_quotient(g, t));
    if (den.is_one()) return RationalFunction(std::move(num));
    return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) {
        return RationalFunction(Polynomial(0L).embed(unify_contexts(a.context(), b.context())));
    }
    if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);

    // (p/q)(r/s) = (p/g1)(r/g2) / ((q/g2)(s/g1)) with g1 = gcd(p, s), g2 = gcd(r, q)
    Polynomial p = a.num_, q = a.den_, r = b.num_, s = b.den_;
    if (!s.is_one()) {
        const Polynomial g1 = poly_gcd(p, s);
        if (!g1.is_one()) {
            p = exact_quotient(p, g1);
            s = exact_quotient(s, g1);
        }
    }
    if (!q.is_one()) {
        const Polynomial g2 = poly_gcd(r, q);
        if (!g2.is_one()) {
            r = exact_quotient(r, g2);
            q = exact_quotient(q, g2);
        }
    }
    Polynomial den = q * s;
    if (den.is_one()) return RationalFunction(p * r);
    return RationalFunction(p * r, std::move(den), true);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction RationalFunction::embed(const ContextPtr& target) const {
    return RationalFunction(num_.embed(target), den_.embed(target), true);
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string out = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    out += '/';
    const bool bare = den_.is_monomial() && den_.leading_monomial().support_size() <= 1;
    out += bare ? den_.to_string() : "(" + den_.to_string() + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

}  // namespace polymf
