#include "polymf/category.hpp"

#include <algorithm>
#include <set>

#include "polymf/errors.hpp"

namespace polymf {

namespace {

std::string shape(const RatMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

MorphismReport compare_sides(const RatMatrix& lhs, const RatMatrix& rhs, int equation, const char* text) {
    MorphismReport r;
    if (auto diff = lhs.first_difference(rhs)) {
        r.ok = false;
        r.equation = equation;
        r.row = diff->first;
        r.col = diff->second;
        r.message = std::string("equation (") + std::to_string(equation) + ") " + text + " fails at entry (" +
                    std::to_string(r.row) + ", " + std::to_string(r.col) + "): " + lhs(r.row, r.col).to_string() +
                    " vs " + rhs(r.row, r.col).to_string();
    }
    return r;
}

void collect(const Polynomial& p, std::set<std::string>& out) {
    if (!p.context()) return;
    for (auto i : p.support()) out.insert(p.context()->name(i));
}

void collect(const RatMatrix& m, std::set<std::string>& out) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            collect(m(i, j).numerator(), out);
            collect(m(i, j).denominator(), out);
        }
    }
}

ContextPtr context_of(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (auto c = m(i, j).context()) return c;
        }
    }
    return nullptr;
}

ContextPtr tensor_context(const MF3& x, const MF3& y, VariablePolicy policy) {
    if (policy == VariablePolicy::Disjoint) {
        const auto vx = occurring_variables(x);
        const auto vy = occurring_variables(y);
        for (const auto& v : vx) {
            if (std::find(vy.begin(), vy.end(), v) != vy.end()) {
                throw VariableCollisionError("variable '" + v + "' occurs in both tensor factors");
            }
        }
    }
    return merge_contexts(context_of(x), context_of(y));
}

}  // namespace

std::vector<std::string> occurring_variables(const MF3& x) {
    std::set<std::string> names;
    collect(x.target(), names);
    collect(x.a1(), names);
    collect(x.a2(), names);
    collect(x.a3(), names);
    return {names.begin(), names.end()};
}

ContextPtr context_of(const MF3& x) {
    if (auto c = x.target().context()) return c;
    for (int k = 1; k <= 3; ++k) {
        if (auto c = context_of(x.component(k))) return c;
    }
    return nullptr;
}

MorphismReport check_morphism_equations(const RatMatrix& alpha, const RatMatrix& beta, const RatMatrix& delta,
                                        const MF3& source, const MF3& target) {
    MorphismReport r;
    if (source.target() != target.target()) {
        r.ok = false;
        r.message = "source and target factor different polynomials";
        return r;
    }
    const std::size_t n1 = source.size();
    const std::size_t n2 = target.size();
    for (const RatMatrix* m : {&alpha, &beta, &delta}) {
        if (m->rows() != n2 || m->cols() != n1) {
            r.ok = false;
            r.message = "morphism matrix has shape " + shape(*m) + ", expected " + std::to_string(n2) + "x" +
                        std::to_string(n1);
            return r;
        }
    }
    r = compare_sides(alpha * source.a1(), target.a1() * beta, 1, "alpha*phi1 = phi2*beta");
    if (!r.ok) return r;
    r = compare_sides(target.a2() * delta, beta * source.a2(), 2, "psi2*delta = beta*psi1");
    if (!r.ok) return r;
    return compare_sides(delta * source.a3(), target.a3() * alpha, 3, "delta*theta1 = theta2*alpha");
}

Morphism3 morphism_check(RatMatrix alpha, RatMatrix beta, RatMatrix delta, const MF3& source, const MF3& target) {
    const MorphismReport r = check_morphism_equations(alpha, beta, delta, source, target);
    if (!r.ok) throw MorphismError(r.message, r.equation);
    return Morphism3(std::move(alpha), std::move(beta), std::move(delta), std::make_shared<const MF3>(source),
                     std::make_shared<const MF3>(target));
}

Morphism3 identity_morphism(const MF3& x) {
    const RatMatrix id = RatMatrix::identity(x.size());
    return morphism_check(id, id, id, x, x);
}

Morphism3 morphism_compose(const Morphism3& g, const Morphism3& f) {
    if (f.target() != g.source()) {
        throw MorphismError("cannot compose: codomain of the first map is not the domain of the second", 0);
    }
    return morphism_check(g.alpha() * f.alpha(), g.beta() * f.beta(), g.delta() * f.delta(), f.source(),
                          g.target());
}

MF3 mtp3_unchecked(const MF3& x, const MF3& y, const ContextPtr& context) {
    const MF3 xe = x.embed(context);
    const MF3 ye = y.embed(context);
    return MF3(kron(xe.a1(), ye.a1()), kron(xe.a2(), ye.a2()), kron(xe.a3(), ye.a3()), xe.target() * ye.target(),
               std::nullopt);
}

MF3 mtp3(const MF3& x, const MF3& y, VariablePolicy policy) { return mtp3_unchecked(x, y, tensor_context(x, y, policy)); }

Morphism3 mtp3_morphism(const Morphism3& mf, const Morphism3& mg, VariablePolicy policy) {
    const ContextPtr ctx = merge_contexts(
        merge_contexts(tensor_context(mf.source(), mg.source(), policy), context_of(mf.target())),
        context_of(mg.target()));
    const MF3 source = mtp3(mf.source().embed(ctx), mg.source().embed(ctx));
    const MF3 target = mtp3(mf.target().embed(ctx), mg.target().embed(ctx));
    return morphism_check(kron(mf.alpha().embed(ctx), mg.alpha().embed(ctx)),
                          kron(mf.beta().embed(ctx), mg.beta().embed(ctx)),
                          kron(mf.delta().embed(ctx), mg.delta().embed(ctx)), source, target);
}

PermutationMatrix commutativity_witness(const MF3& x, const MF3& y) { return perfect_shuffle(x.size(), y.size()); }

PermutationMatrix right_distributivity_witness(std::size_t m, std::size_t n1, std::size_t n2) {
    const std::size_t n = n1 + n2;
    std::vector<std::size_t> image(m * n);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t split = b < n1 ? a * n1 + b : m * n1 + a * n2 + (b - n1);
            image[split] = a * n + b;
        }
    }
    return PermutationMatrix(std::move(image));
}

}  // namespace polymf
