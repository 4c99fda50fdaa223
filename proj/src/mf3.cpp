#include "polymf/mf3.hpp"

#include "polymf/errors.hpp"

namespace polymf {

CertificateReport check_triple(const RatMatrix& a1, const RatMatrix& a2, const RatMatrix& a3, const Polynomial& f) {
    return check_scalar_identity(a1 * a2 * a3, f);
}

MF3 MF3::certify(RatMatrix a1, RatMatrix a2, RatMatrix a3, Polynomial f, std::optional<Provenance> provenance) {
    const std::size_t n = a1.rows();
    for (const RatMatrix* m : {&a1, &a2, &a3}) {
        if (!m->is_square() || m->rows() != n) throw DimensionError("MF3 components must be square of equal size");
    }
    require_certificate(check_triple(a1, a2, a3, f), "A1*A2*A3 = f*I");
    return MF3(std::move(a1), std::move(a2), std::move(a3), std::move(f), provenance);
}

const RatMatrix& MF3::component(int index) const {
    switch (index) {
        case 1: return a1_;
        case 2: return a2_;
        case 3: return a3_;
        default: throw DimensionError("MF3 component index must be 1, 2 or 3");
    }
}

MF3 MF3::embed(const ContextPtr& target) const {
    return MF3(a1_.embed(target), a2_.embed(target), a3_.embed(target), f_.embed(target), provenance_);
}

MF3 promote(const MF2& x, Factor which, LUMethod method, bool allow_pivoting) {
    const RatMatrix& m = which == Factor::First ? x.p() : x.q();
    LUResult lu = lu_decompose(m, method, allow_pivoting);
    RatMatrix left = lu.pivoted ? lu.permutation.transpose().apply_rows(lu.lower) : std::move(lu.lower);
    const Provenance prov{method, which, lu.pivoted};
    if (which == Factor::First) {
        return MF3::certify(std::move(left), std::move(lu.upper), x.q(), x.target(), prov);
    }
    return MF3::certify(x.p(), std::move(left), std::move(lu.upper), x.target(), prov);
}

MF3 mf3_direct_sum(const MF3& x1, const MF3& x2) {
    if (x1.target() != x2.target()) {
        throw TargetMismatchError("direct sum of factorizations of different polynomials: " +
                                  x1.target().to_string() + " and " + x2.target().to_string());
    }
    return MF3::certify(direct_sum(x1.a1(), x2.a1()), direct_sum(x1.a2(), x2.a2()),
                        direct_sum(x1.a3(), x2.a3()), x1.target());
}

}  // namespace polymf
