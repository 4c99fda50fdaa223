#ifndef POLYMF_CATEGORY_HPP
#define POLYMF_CATEGORY_HPP

#include <memory>
#include <string>
#include <vector>

#include "polymf/matrix.hpp"
#include "polymf/mf3.hpp"

namespace polymf {

/*
 * Morphism (alpha, beta, delta) from X = (phi1, psi1, theta1) to
 * Y = (phi2, psi2, theta2), both factorizations of the same f. Each matrix
 * is n2 x n1 and
 *
 *   (1) alpha * phi1   = phi2 * beta
 *   (2) psi2  * delta  = beta * psi1
 *   (3) delta * theta1 = theta2 * alpha
 */
class Morphism3 {
public:
    const MF3& source() const noexcept { return *source_; }
    const MF3& target() const noexcept { return *target_; }
    const RatMatrix& alpha() const noexcept { return alpha_; }
    const RatMatrix& beta() const noexcept { return beta_; }
    const RatMatrix& delta() const noexcept { return delta_; }

    /// Same maps between the same objects.
    friend bool operator==(const Morphism3& a, const Morphism3& b) {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.delta_ == b.delta_ &&
               a.source() == b.source() && a.target() == b.target();
    }
    friend bool operator!=(const Morphism3& a, const Morphism3& b) { return !(a == b); }

private:
    friend Morphism3 morphism_check(RatMatrix, RatMatrix, RatMatrix, const MF3&, const MF3&);

    Morphism3(RatMatrix alpha, RatMatrix beta, RatMatrix delta, std::shared_ptr<const MF3> source,
              std::shared_ptr<const MF3> target)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), delta_(std::move(delta)),
          source_(std::move(source)), target_(std::move(target)) {}

    RatMatrix alpha_;
    RatMatrix beta_;
    RatMatrix delta_;
    std::shared_ptr<const MF3> source_;
    std::shared_ptr<const MF3> target_;
};

/// Outcome of checking the three morphism equations without throwing.
struct MorphismReport {
    bool ok = true;
    int equation = 0;  // 0: shape/target problem, 1..3: failed equation
    std::size_t row = 0;
    std::size_t col = 0;
    std::string message;
};

MorphismReport check_morphism_equations(const RatMatrix& alpha, const RatMatrix& beta, const RatMatrix& delta,
                                        const MF3& source, const MF3& target);

/// Certified morphism or MorphismError naming the first violated equation.
Morphism3 morphism_check(RatMatrix alpha, RatMatrix beta, RatMatrix delta, const MF3& source, const MF3& target);

Morphism3 identity_morphism(const MF3& x);

/// g after f: (alpha_g alpha_f, beta_g beta_f, delta_g delta_f); f's codomain must be g's domain.
Morphism3 morphism_compose(const Morphism3& g, const Morphism3& f);

/*
 * How variables of the two operands of the tensor product relate. Shared
 * identifies variables with equal names; Disjoint rejects any name that
 * occurs in both operands.
 */
enum class VariablePolicy { Shared, Disjoint };

/// Variable names that occur in the target or any component.
std::vector<std::string> occurring_variables(const MF3& x);

/// Context of the factorization (the first one found among target and entries).
ContextPtr context_of(const MF3& x);

/// Multiplicative tensor product: (phi (x) phi', psi (x) psi', theta (x) theta'), a size n*m factorization of f*g.
MF3 mtp3(const MF3& x, const MF3& y, VariablePolicy policy = VariablePolicy::Shared);

/// Componentwise Kronecker product of morphisms, from mtp3 of the sources to mtp3 of the targets.
Morphism3 mtp3_morphism(const Morphism3& mf, const Morphism3& mg, VariablePolicy policy = VariablePolicy::Shared);

/// S = perfect_shuffle(n, m): every component of mtp3(y, x) equals S * (that of mtp3(x, y)) * S^T.
PermutationMatrix commutativity_witness(const MF3& x, const MF3& y);

/*
 * For w of size m and x1, x2 of sizes n1, n2: every component of
 * mtp3(w, x1) (+) mtp3(w, x2) equals S * (that of mtp3(w, x1 (+) x2)) * S^T.
 * Only for m = 1 is S the identity: w (x) diag(a, b) interleaves the blocks.
 */
PermutationMatrix right_distributivity_witness(std::size_t m, std::size_t n1, std::size_t n2);

}  // namespace polymf

#endif  // POLYMF_CATEGORY_HPP
