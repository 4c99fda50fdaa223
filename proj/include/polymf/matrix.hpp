#ifndef POLYMF_MATRIX_HPP
#define POLYMF_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "polymf/rational_function.hpp"

namespace polymf {

/// Dense row-major matrix over the fraction field.
class RatMatrix {
public:
    /// rows x cols zero matrix; both dimensions must be positive.
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<RationalFunction>> rows);
    explicit RatMatrix(const std::vector<std::vector<RationalFunction>>& rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix scalar(std::size_t n, const RationalFunction& value);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const RationalFunction& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    RationalFunction& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RationalFunction& at(std::size_t i, std::size_t j) const;

    RatMatrix transpose() const;
    RatMatrix embed(const ContextPtr& target) const;

    bool is_lower_triangular() const;
    bool is_upper_triangular() const;
    bool has_unit_diagonal() const;
    bool is_zero() const;

    /// Row-major position of the first entry where the matrices differ.
    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RatMatrix& other) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    RatMatrix operator-() const;
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RationalFunction& s, const RatMatrix& m);

    /// Entries as canonical strings, row by row.
    std::vector<std::vector<std::string>> to_strings() const;
    /// Column-aligned multi-line rendering.
    std::string to_pretty_string(const std::string& indent = "") const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RationalFunction> data_;
};

/// Exact product; throws DimensionError when a.cols() != b.rows().
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

/// Kronecker product: block (i, j) is a(i, j) * b.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

/// Block-diagonal [[a, 0], [0, b]].
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

/// Gauss-Jordan inverse; throws StructurallySingularError for singular input.
RatMatrix inverse(const RatMatrix& a);

/*
 * Permutation matrix stored as an index map: row i has its single 1 in
 * column image[i]. Hence (P * A) row i is A row image[i].
 */
class PermutationMatrix {
public:
    explicit PermutationMatrix(std::vector<std::size_t> image);
    static PermutationMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return image_.size(); }
    const std::vector<std::size_t>& image() const noexcept { return image_; }
    bool is_identity() const noexcept;

    PermutationMatrix transpose() const;
    /// Sign of the permutation, +1 or -1.
    int sign() const;

    RatMatrix to_matrix() const;

    /// P * A without materializing P.
    RatMatrix apply_rows(const RatMatrix& a) const;
    /// A * P^T, i.e. column j of the result is column image[j] of A.
    RatMatrix apply_cols_transposed(const RatMatrix& a) const;
    /// P * A * P^T.
    RatMatrix conjugate(const RatMatrix& a) const;

    friend bool operator==(const PermutationMatrix& a, const PermutationMatrix& b) {
        return a.image_ == b.image_;
    }

private:
    std::vector<std::size_t> image_;
};

/*
 * Perfect shuffle S_{m,n} = sum_i e_i^T (x) I_n (x) e_i, an mn x mn
 * permutation. For C p x q and D r x s: D (x) C = S_{p,r} (C (x) D) S_{q,s}^T.
 */
PermutationMatrix perfect_shuffle(std::size_t m, std::size_t n);

}  // namespace polymf

#endif  // POLYMF_MATRIX_HPP
