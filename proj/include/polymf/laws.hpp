#ifndef POLYMF_LAWS_HPP
#define POLYMF_LAWS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polymf/category.hpp"
#include "polymf/mf3.hpp"

namespace polymf::laws {

/// Seeded generator whose draws do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [0, n).
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    /// Integer in [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
    bool coin() { return (engine_() & 1U) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Seed of an individual case, so cases can be replayed independently.
std::uint64_t case_seed(std::uint64_t seed, std::size_t case_index);

/// Context with names prefix1, ..., prefixN.
ContextPtr side_context(const std::string& prefix, std::size_t variables);

/// Random nonzero polynomial with at most `max_terms` terms of total degree at most `max_degree`.
Polynomial random_polynomial(Rng& rng, const ContextPtr& ctx, std::size_t max_terms, unsigned max_degree);

/// Random nonzero polynomial of degree <= 3 as a sum of `summands` products.
std::vector<TermSplit> random_splits(Rng& rng, const ContextPtr& ctx, std::size_t summands);

/// Random factorization of `f` (given by its splits) of size 1, 2 or 3.
MF3 random_mf3_of(Rng& rng, const std::vector<TermSplit>& splits, std::size_t size);

/// Random factorization of a fresh random polynomial, size in [1, max_size].
MF3 random_mf3(Rng& rng, const ContextPtr& ctx, std::size_t max_size);

/// Unit lower times unit upper triangular with small entries; invertible over the polynomials.
RatMatrix random_invertible(Rng& rng, const ContextPtr& ctx, std::size_t n);

/*
 * Random certified morphism out of `source`: a polynomial multiple of the
 * identity, a change of basis (A, B, D) onto (A phi B^-1, B psi D^-1, D theta A^-1),
 * or an inclusion into a direct sum.
 */
Morphism3 random_morphism(Rng& rng, const MF3& source, bool allow_resize = true);

enum class Fault {
    None,
    BreakAssociativity,  // perturbs one entry of one side of the associativity comparison
    WrongShuffle,        // conjugates with perfect_shuffle(m, n) instead of (n, m)
};

struct LawOptions {
    std::uint64_t seed = 1;
    std::size_t cases = 25;
    std::optional<std::size_t> only_case;
    unsigned threads = 0;  // 0: hardware concurrency
    Fault fault = Fault::None;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<std::size_t> first_failure;
    std::string detail;
};

struct LawReport {
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::optional<std::size_t> only_case;
    std::vector<SuiteResult> suites;

    bool ok() const;
    std::string to_text() const;
};

/// Suite names in report order.
const std::vector<std::string>& suite_names();

LawReport run_laws(const LawOptions& options);

}  // namespace polymf::laws

#endif  // POLYMF_LAWS_HPP
