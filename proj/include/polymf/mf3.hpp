#ifndef POLYMF_MF3_HPP
#define POLYMF_MF3_HPP

#include <optional>
#include <string>

#include "polymf/matrix.hpp"
#include "polymf/mf2.hpp"

namespace polymf {

enum class LUMethod { Doolittle, Crout };
enum class Factor { First, Second };

std::string to_string(LUMethod m);
std::string to_string(Factor f);
std::optional<LUMethod> parse_lu_method(std::string_view text);
std::optional<Factor> parse_factor(std::string_view text);

/*
 * L * U = permutation * A. Doolittle puts ones on the diagonal of L,
 * Crout on the diagonal of U. Without pivoting the permutation is the
 * identity and `pivoted` is false.
 */
struct LUResult {
    RatMatrix lower;
    RatMatrix upper;
    PermutationMatrix permutation;
    LUMethod method;
    bool pivoted = false;
};

/*
 * LU decomposition over the fraction field.
 *
 * A zero pivot raises SingularPivotError unless pivoting is allowed, in
 * which case the first row below (in current order) with a nonzero
 * candidate pivot is swapped in. If no row has one, the matrix is singular
 * and StructurallySingularError is raised.
 */
LUResult lu_decompose(const RatMatrix& a, LUMethod method, bool allow_pivoting = false);

/// How an MF3 was obtained from an MF2, when it was.
struct Provenance {
    LUMethod method = LUMethod::Doolittle;
    Factor decomposed = Factor::First;
    bool pivoted = false;
};

/// A triple (A1, A2, A3) of square matrices with A1 * A2 * A3 = f * I.
class MF3 {
public:
    static MF3 certify(RatMatrix a1, RatMatrix a2, RatMatrix a3, Polynomial f,
                       std::optional<Provenance> provenance = std::nullopt);

    const RatMatrix& a1() const noexcept { return a1_; }
    const RatMatrix& a2() const noexcept { return a2_; }
    const RatMatrix& a3() const noexcept { return a3_; }
    const RatMatrix& component(int index) const;
    const Polynomial& target() const noexcept { return f_; }
    std::size_t size() const noexcept { return a1_.rows(); }
    const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

    /// Same factorization over a wider context.
    MF3 embed(const ContextPtr& target) const;

    /// Componentwise equality of the matrices and the target.
    friend bool operator==(const MF3& a, const MF3& b) {
        return a.f_ == b.f_ && a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_;
    }
    friend bool operator!=(const MF3& a, const MF3& b) { return !(a == b); }

private:
    // Kronecker products of certified triples are certified by the mixed product rule.
    friend MF3 mtp3_unchecked(const MF3& x, const MF3& y, const ContextPtr& context);

    MF3(RatMatrix a1, RatMatrix a2, RatMatrix a3, Polynomial f, std::optional<Provenance> p)
        : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), f_(std::move(f)), provenance_(p) {}

    RatMatrix a1_;
    RatMatrix a2_;
    RatMatrix a3_;
    Polynomial f_;
    std::optional<Provenance> provenance_;
};

inline MF3 mf3_from_triplet(RatMatrix a1, RatMatrix a2, RatMatrix a3, Polynomial f) {
    return MF3::certify(std::move(a1), std::move(a2), std::move(a3), std::move(f));
}

/// Checks the triple product without constructing an MF3.
CertificateReport check_triple(const RatMatrix& a1, const RatMatrix& a2, const RatMatrix& a3, const Polynomial& f);

/*
 * Splits one factor of (P, Q) by LU. With L * U = Pi * M for the chosen
 * factor M, M is replaced by (Pi^T L) * U, so
 *   first:  (Pi^T L, U, Q)
 *   second: (P, Pi^T L, U)
 */
MF3 promote(const MF2& x, Factor which = Factor::First, LUMethod method = LUMethod::Doolittle,
            bool allow_pivoting = false);

/// Componentwise block-diagonal sum of two factorizations of the same f.
MF3 mf3_direct_sum(const MF3& x1, const MF3& x2);

}  // namespace polymf

#endif  // POLYMF_MF3_HPP
