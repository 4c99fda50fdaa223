#include <numeric>

#include "polymf/errors.hpp"
#include "polymf/mf3.hpp"

namespace polymf {

std::string to_string(LUMethod m) { return m == LUMethod::Doolittle ? "doolittle" : "crout"; }

std::string to_string(Factor f) { return f == Factor::First ? "first" : "second"; }

std::optional<LUMethod> parse_lu_method(std::string_view text) {
    if (text == "doolittle") return LUMethod::Doolittle;
    if (text == "crout") return LUMethod::Crout;
    return std::nullopt;
}

std::optional<Factor> parse_factor(std::string_view text) {
    if (text == "first") return Factor::First;
    if (text == "second") return Factor::Second;
    return std::nullopt;
}

LUResult lu_decompose(const RatMatrix& a, LUMethod method, bool allow_pivoting) {
    if (!a.is_square()) throw DimensionError("LU decomposition of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix w(a);
    RatMatrix lower(n, n);
    RatMatrix upper(n, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    bool pivoted = false;

    // w[k][j] - sum_{s<k} lower[k][s] * upper[s][j]
    auto reduced_row = [&](std::size_t k, std::size_t j) {
        RationalFunction v = w(k, j);
        for (std::size_t s = 0; s < k; ++s) {
            if (lower(k, s).is_zero() || upper(s, j).is_zero()) continue;
            v -= lower(k, s) * upper(s, j);
        }
        return v;
    };
    // w[i][k] - sum_{s<k} lower[i][s] * upper[s][k]
    auto reduced_col = [&](std::size_t i, std::size_t k) {
        RationalFunction v = w(i, k);
        for (std::size_t s = 0; s < k; ++s) {
            if (lower(i, s).is_zero() || upper(s, k).is_zero()) continue;
            v -= lower(i, s) * upper(s, k);
        }
        return v;
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::vector<RationalFunction> cand(n);
        for (std::size_t i = k; i < n; ++i) cand[i] = reduced_col(i, k);

        if (cand[k].is_zero()) {
            if (!allow_pivoting) throw SingularPivotError(k + 1);
            std::size_t r = k + 1;
            while (r < n && cand[r].is_zero()) ++r;
            if (r == n) throw StructurallySingularError(k);
            for (std::size_t j = 0; j < n; ++j) std::swap(w(r, j), w(k, j));
            for (std::size_t s = 0; s < k; ++s) std::swap(lower(r, s), lower(k, s));
            std::swap(cand[r], cand[k]);
            std::swap(perm[r], perm[k]);
            pivoted = true;
        }

        if (method == LUMethod::Doolittle) {
            upper(k, k) = cand[k];
            lower(k, k) = RationalFunction(1L);
            const RationalFunction inv = cand[k].inverse();
            for (std::size_t i = k + 1; i < n; ++i) lower(i, k) = cand[i] * inv;
            for (std::size_t j = k + 1; j < n; ++j) upper(k, j) = reduced_row(k, j);
        } else {
            for (std::size_t i = k; i < n; ++i) lower(i, k) = cand[i];
            upper(k, k) = RationalFunction(1L);
            const RationalFunction inv = cand[k].inverse();
            for (std::size_t j = k + 1; j < n; ++j) upper(k, j) = reduced_row(k, j) * inv;
        }
    }
    return LUResult{std::move(lower), std::move(upper), PermutationMatrix(std::move(perm)), method, pivoted};
}

}  // namespace polymf
