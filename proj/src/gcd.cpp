// Multivariate gcd over Q: recursive content/primitive-part reduction with a
// subresultant remainder sequence in the main variable. Univariate images at
// integer points bound the degree of the gcd in each variable first; a zero
// bound lets the gcd be taken over coefficients in fewer variables.

#include <algorithm>
#include <iterator>

#include "polymf/errors.hpp"
#include "polymf/polynomial.hpp"

namespace polymf {

namespace {

Polynomial one_in(const ContextPtr& ctx) { return Polynomial::term(ctx, Monomial(), Rational(1)); }

bool supports_intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

// gcd(m, p) for a single-term m: the monomial with the minimum exponents over all terms.
Polynomial monomial_gcd(const Polynomial& m, const Polynomial& p, const ContextPtr& ctx) {
    Monomial g = m.leading_monomial();
    for (const auto& [mono, c] : p.terms()) {
        g = Monomial::gcd(g, mono);
        if (g.is_one()) break;
    }
    return Polynomial::term(ctx, g, Rational(1));
}

Polynomial primitive_part(const Polynomial& p, std::size_t var) {
    return exact_quotient(p, content_in(p, var));
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var) {
    return p.coefficient_in(var, static_cast<std::uint32_t>(p.degree_in(var)));
}

// Monic gcd of two polynomials that are primitive in `var` and both involve it.
Polynomial primitive_gcd(Polynomial a, Polynomial b, std::size_t var, const ContextPtr& ctx) {
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    Polynomial g = one_in(ctx);
    Polynomial h = one_in(ctx);
    for (;;) {
        const long delta = a.degree_in(var) - b.degree_in(var);
        Polynomial r = pseudo_remainder(a, b, var);
        if (r.is_zero()) return primitive_part(b, var).monic();
        if (r.degree_in(var) == 0) return one_in(ctx);
        a = std::move(b);
        b = exact_quotient(r, g * h.pow(static_cast<unsigned>(delta)));
        g = leading_coefficient_in(a, var);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_quotient(g.pow(static_cast<unsigned>(delta)),
                               h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
}


using Univariate = std::vector<Rational>;  // coefficient of v^k at index k

void trim(Univariate& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

// p with every variable but `var` replaced by point[j].
Univariate evaluate_except(const Polynomial& p, std::size_t var, const std::vector<long>& point) {
    Univariate u(static_cast<std::size_t>(std::max(0L, p.degree_in(var))) + 1);
    for (const auto& [mono, c] : p.terms()) {
        Rational value = c;
        for (std::size_t j = 0; j < mono.width(); ++j) {
            if (j == var) continue;
            for (std::uint32_t e = 0; e < mono.exponent(j); ++e) value *= point[j];
        }
        u[mono.exponent(var)] += value;
    }
    trim(u);
    return u;
}

Univariate univariate_remainder(Univariate a, const Univariate& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

long univariate_gcd_degree(Univariate a, Univariate b) {
    while (!b.empty()) {
        Univariate r = univariate_remainder(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<long>(a.size()) - 1;
}

/*
 * Upper bound on the degree in `var` of gcd(a, b), from an image at an
 * integer point where neither leading coefficient in `var` vanishes.
 * Returns -1 when no such point was found among the tries.
 */
long degree_bound(const Polynomial& a, const Polynomial& b, std::size_t var, std::size_t width) {
    static constexpr long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    const long da = a.degree_in(var);
    const long db = b.degree_in(var);
    for (long attempt = 0; attempt < 4; ++attempt) {
        std::vector<long> point(width);
        for (std::size_t j = 0; j < width; ++j) point[j] = kPrimes[(j + 3 * attempt) % 12] + attempt;
        Univariate ua = evaluate_except(a, var, point);
        Univariate ub = evaluate_except(b, var, point);
        if (static_cast<long>(ua.size()) - 1 != da || static_cast<long>(ub.size()) - 1 != db) continue;
        return univariate_gcd_degree(std::move(ua), std::move(ub));
    }
    return -1;
}

// gcd of all coefficients of a and b in `var`, smallest first.
Polynomial coefficient_gcd(const Polynomial& a, const Polynomial& b, std::size_t var, const ContextPtr& ctx) {
    std::vector<Polynomial> coeffs;
    for (const Polynomial* p : {&a, &b}) {
        for (long k = p->degree_in(var); k >= 0; --k) {
            Polynomial c = p->coefficient_in(var, static_cast<std::uint32_t>(k));
            if (!c.is_zero()) coeffs.push_back(std::move(c));
        }
    }
    std::sort(coeffs.begin(), coeffs.end(),
              [](const Polynomial& x, const Polynomial& y) { return x.term_count() < y.term_count(); });
    Polynomial g;
    for (const auto& c : coeffs) {
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g.embed(ctx);
}

}  // namespace

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
    if (b.is_zero()) throw DivisionByZeroError("pseudo-remainder by zero");
    const long db = b.degree_in(var);
    long da = a.degree_in(var);
    if (da < db) return a;
    const Polynomial lcb = leading_coefficient_in(b, var);
    long steps = da - db + 1;
    Polynomial r = a;
    while (!r.is_zero() && (da = r.degree_in(var)) >= db) {
        Polynomial lcr = r.coefficient_in(var, static_cast<std::uint32_t>(da));
        Monomial shift = Monomial::variable(var, static_cast<std::uint32_t>(da - db));
        r = lcb * r - lcr * b.times_monomial(shift, Rational(1));
        --steps;
    }
    if (steps > 0) r = r * lcb.pow(static_cast<unsigned>(steps));
    return r;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
    const long d = p.degree_in(var);
    if (d < 0) return Polynomial();
    Polynomial c;
    for (long k = d; k >= 0; --k) {
        Polynomial coeff = p.coefficient_in(var, static_cast<std::uint32_t>(k));
        if (coeff.is_zero()) continue;
        c = poly_gcd(c, coeff);
        if (c.is_one()) break;
    }
    return c.embed(p.context());
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    const ContextPtr ctx = unify_contexts(a.context(), b.context());
    if (a.is_zero()) return b.monic().embed(ctx);
    if (b.is_zero()) return a.monic().embed(ctx);
    if (a.is_constant() || b.is_constant()) return one_in(ctx);
    if (a.is_monomial()) return monomial_gcd(a, b, ctx);
    if (b.is_monomial()) return monomial_gcd(b, a, ctx);

    const auto sa = a.support();
    const auto sb = b.support();
    if (!supports_intersect(sa, sb)) return one_in(ctx);

    const Polynomial am = a.monic().embed(ctx);
    const Polynomial bm = b.monic().embed(ctx);
    if (am == bm) return am;

    if (bm.term_count() <= am.term_count()) {
        if (divide_exact(am, bm)) return bm;
    } else if (divide_exact(bm, am)) {
        return am;
    }

    // A variable the gcd cannot involve reduces the problem to coefficients.
    std::size_t width = 0;
    for (const auto& [m, c] : am.terms()) width = std::max(width, m.width());
    for (const auto& [m, c] : bm.terms()) width = std::max(width, m.width());
    std::vector<std::size_t> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    for (std::size_t v : common) {
        if (degree_bound(am, bm, v, width) == 0) return coefficient_gcd(am, bm, v, ctx);
    }

    const std::size_t var = std::min(sa.front(), sb.front());
    const bool in_a = std::binary_search(sa.begin(), sa.end(), var);
    const bool in_b = std::binary_search(sb.begin(), sb.end(), var);
    if (!in_b) return poly_gcd(content_in(am, var), bm);
    if (!in_a) return poly_gcd(am, content_in(bm, var));

    const Polynomial ca = content_in(am, var);
    const Polynomial cb = content_in(bm, var);
    const Polynomial c = poly_gcd(ca, cb);
    const Polynomial g = primitive_gcd(exact_quotient(am, ca), exact_quotient(bm, cb), var, ctx);
    return (c * g).monic();
}

}  // namespace polymf
