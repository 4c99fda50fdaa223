#include "polymf/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "polymf/errors.hpp"

namespace polymf {

// ---------------------------------------------------------------- context

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(name.front())) return false;
    return std::all_of(name.begin() + 1, name.end(),
                       [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i])) {
            throw ContextError("invalid variable name '" + names_[i] + "'");
        }
        if (!index_.emplace(names_[i], i).second) {
            throw ContextError("duplicate variable name '" + names_[i] + "'");
        }
    }
}

ContextPtr VariableContext::make(std::vector<std::string> names) {
    return ContextPtr(new VariableContext(std::move(names)));
}

std::optional<std::size_t> VariableContext::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ContextPtr merge_contexts(const ContextPtr& a, const ContextPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b || *a == *b) return a;
    std::vector<std::string> names = a->names();
    for (const auto& n : b->names()) {
        if (!a->find(n)) names.push_back(n);
    }
    return VariableContext::make(std::move(names));
}

bool compatible(const ContextPtr& a, const ContextPtr& b) {
    return !a || !b || a == b || *a == *b;
}

ContextPtr unify_contexts(const ContextPtr& a, const ContextPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (*a == *b) return a;
    throw ContextError("mismatched variable contexts");
}

// --------------------------------------------------------------- monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    degree_ = 0;
    for (auto e : exps_) degree_ += e;
}

std::size_t Monomial::support_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e != 0; }));
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (exps_.size() > other.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::uint32_t> e(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(i) + other.exponent(i);
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < divisor.exps_.size(); ++i) e[i] -= divisor.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(std::min(a.exps_.size(), b.exps_.size()));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::without(std::size_t index) const {
    if (index >= exps_.size()) return *this;
    std::vector<std::uint32_t> e(exps_);
    e[index] = 0;
    return Monomial(std::move(e));
}

int grlex_compare(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const std::size_t n = std::max(a.width(), b.width());
    for (std::size_t i = 0; i < n; ++i) {
        auto ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

// ------------------------------------------------------------- polynomial

Polynomial::Polynomial(const Rational& constant) {
    if (sgn(constant) != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial Polynomial::variable(ContextPtr context, std::size_t index) {
    if (!context || index >= context->size()) {
        throw ContextError("variable index out of range");
    }
    return term(std::move(context), Monomial::variable(index), Rational(1));
}

Polynomial Polynomial::variable(ContextPtr context, std::string_view name) {
    if (!context) throw ContextError("no variable context");
    auto idx = context->find(name);
    if (!idx) throw ContextError("unknown variable '" + std::string(name) + "'");
    return variable(std::move(context), *idx);
}

Polynomial Polynomial::term(ContextPtr context, Monomial monomial, Rational coefficient) {
    if (!monomial.is_one() && (!context || monomial.width() > context->size())) {
        throw ContextError("monomial does not fit the variable context");
    }
    Polynomial p;
    p.ctx_ = std::move(context);
    coefficient.canonicalize();
    if (sgn(coefficient) != 0) p.terms_.emplace(std::move(monomial), std::move(coefficient));
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const noexcept {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

long Polynomial::total_degree() const noexcept {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.begin()->first.degree());
}

long Polynomial::degree_in(std::size_t index) const noexcept {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m.exponent(index));
    return d;
}

Polynomial Polynomial::coefficient_in(std::size_t index, std::uint32_t power) const {
    Polynomial r;
    r.ctx_ = ctx_;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(index) == power) r.terms_.emplace(m.without(index), c);
    }
    return r;
}

std::vector<std::size_t> Polynomial::support() const {
    std::vector<bool> seen;
    for (const auto& [m, c] : terms_) {
        if (seen.size() < m.width()) seen.resize(m.width(), false);
        for (std::size_t i = 0; i < m.width(); ++i) {
            if (m.exponent(i) != 0) seen[i] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i]) out.push_back(i);
    }
    return out;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || terms_.begin()->second == 1) return *this;
    Rational inv = 1 / terms_.begin()->second;
    return scaled(inv);
}

Polynomial Polynomial::embed(const ContextPtr& target) const {
    if (ctx_ == target) return *this;
    if (is_constant()) {
        Polynomial r(*this);
        r.ctx_ = target;
        return r;
    }
    if (!target) throw ContextError("cannot drop the context of a non-constant polynomial");
    std::vector<std::size_t> map(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        auto idx = target->find(ctx_->name(i));
        map[i] = idx ? *idx : static_cast<std::size_t>(-1);
    }
    Polynomial r;
    r.ctx_ = target;
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e(target->size(), 0);
        for (std::size_t i = 0; i < m.width(); ++i) {
            if (m.exponent(i) == 0) continue;
            if (map[i] == static_cast<std::size_t>(-1)) {
                throw ContextError("variable '" + ctx_->name(i) + "' missing from target context");
            }
            e[map[i]] = m.exponent(i);
        }
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

void Polynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
    if (sgn(coefficient) == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Polynomial::subtract_scaled(const Polynomial& other, const Monomial& shift,
                                 const Rational& factor) {
    for (const auto& [m, c] : other.terms_) add_term(m * shift, -factor * c);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    ctx_ = unify_contexts(ctx_, other.ctx_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    ctx_ = unify_contexts(ctx_, other.ctx_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.ctx_ = unify_contexts(a.ctx_, b.ctx_);
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_constant()) return a.scaled(b.terms_.begin()->second).embed(r.ctx_);
    if (a.is_constant()) return b.scaled(a.terms_.begin()->second).embed(r.ctx_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (sgn(factor) == 0) {
        Polynomial z;
        z.ctx_ = ctx_;
        return z;
    }
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c *= factor;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& monomial, const Rational& coefficient) const {
    Polynomial r;
    r.ctx_ = ctx_;
    if (sgn(coefficient) == 0) return r;
    // Multiplying by a monomial preserves the relative order, so hinted inserts stay linear.
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * monomial, c * coefficient);
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(1L);
    result.ctx_ = ctx_;
    Polynomial base(*this);
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!compatible(a.ctx_, b.ctx_)) return false;
    return a.terms_ == b.terms_;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m, const ContextPtr& ctx) {
    bool first = true;
    for (std::size_t i = 0; i < m.width(); ++i) {
        auto e = m.exponent(i);
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << (ctx ? ctx->name(i) : "v" + std::to_string(i));
        if (e != 1) os << '^' << e;
    }
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        Rational mag = abs(c);
        if (m.is_one()) {
            os << format_rational(mag);
        } else {
            if (mag != 1) os << format_rational(mag) << '*';
            append_monomial(os, m, ctx_);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- division

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    ContextPtr ctx = unify_contexts(a.context(), b.context());
    if (b.is_constant()) return a.scaled(1 / b.leading_coefficient()).embed(ctx);

    if (a.is_zero()) return Polynomial(0L).embed(ctx);
    // Cheap rejections: degrees per variable, and the lowest terms must divide too.
    if (b.total_degree() > a.total_degree()) return std::nullopt;
    for (std::size_t v = 0; v < (ctx ? ctx->size() : 0); ++v) {
        if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;
    }
    if (!b.terms_.rbegin()->first.divides(a.terms_.rbegin()->first)) return std::nullopt;

    Polynomial remainder = a;
    remainder.ctx_ = ctx;
    Polynomial quotient;
    quotient.ctx_ = ctx;
    const Monomial& lm = b.leading_monomial();
    const Rational& lc = b.leading_coefficient();
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = *remainder.terms_.begin();
        if (!lm.divides(rm)) return std::nullopt;
        Monomial shift = rm / lm;
        Rational factor = rc / lc;
        quotient.terms_.emplace_hint(quotient.terms_.end(), shift, factor);
        remainder.subtract_scaled(b, shift, factor);
    }
    return quotient;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
    return std::move(*q);
}

}  // namespace polymf
