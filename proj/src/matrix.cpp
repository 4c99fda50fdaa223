#include "polymf/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "polymf/errors.hpp"

namespace polymf {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<RationalFunction>> rows)
    : RatMatrix(std::vector<std::vector<RationalFunction>>(rows.begin(), rows.end())) {}

RatMatrix::RatMatrix(const std::vector<std::vector<RationalFunction>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) { return scalar(n, RationalFunction(1L)); }

RatMatrix RatMatrix::scalar(std::size_t n, const RationalFunction& value) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
}

const RationalFunction& RatMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
    return (*this)(i, j);
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

RatMatrix RatMatrix::embed(const ContextPtr& target) const {
    RatMatrix r(*this);
    for (auto& e : r.data_) e = e.embed(target);
    return r;
}

bool RatMatrix::is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (!(*this)(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool RatMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < std::min(i, cols_); ++j) {
            if (!(*this)(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool RatMatrix::has_unit_diagonal() const {
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        if (!(*this)(i, i).is_one()) return false;
    }
    return true;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const RationalFunction& e) { return e.is_zero(); });
}

std::optional<std::pair<std::size_t, std::size_t>> RatMatrix::first_difference(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return std::make_pair(std::size_t{0}, std::size_t{0});
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (data_[k] != other.data_[k]) return std::make_pair(k / cols_, k % cols_);
    }
    return std::nullopt;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix r(*this);
    for (auto& e : r.data_) e = -e;
    return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    RatMatrix r(a);
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + (-b); }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                             std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                             std::to_string(b.cols_));
    }
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) {
            RationalFunction acc;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                const auto& y = b(k, j);
                if (x.is_zero() || y.is_zero()) continue;
                acc += x * y;
            }
            r(i, j) = std::move(acc);
        }
    }
    return r;
}

RatMatrix operator*(const RationalFunction& s, const RatMatrix& m) {
    RatMatrix r(m);
    for (auto& e : r.data_) e = s * e;
    return r;
}

std::vector<std::vector<std::string>> RatMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).to_string();
    }
    return out;
}

std::string RatMatrix::to_pretty_string(const std::string& indent) const {
    const auto cells = to_strings();
    std::vector<std::size_t> width(cols_, 0);
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < cols_; ++j) width[j] = std::max(width[j], row[j].size());
    }
    std::ostringstream os;
    for (const auto& row : cells) {
        os << indent << "[ ";
        for (std::size_t j = 0; j < cols_; ++j) {
            os << row[j] << std::string(width[j] - row[j].size(), ' ');
            os << (j + 1 < cols_ ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) { return a * b; }

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& s = a(i, j);
            if (s.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    if (b(k, l).is_zero()) continue;
                    r(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
                }
            }
        }
    }
    return r;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    }
    return r;
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix w(a);
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w(p, k).is_zero()) ++p;
        if (p == n) throw StructurallySingularError(k);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(p, j), w(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        }
        const RationalFunction pivot_inv = w(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w(k, j) = w(k, j) * pivot_inv;
            inv(k, j) = inv(k, j) * pivot_inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w(i, k).is_zero()) continue;
            const RationalFunction factor = w(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (!w(k, j).is_zero()) w(i, j) -= factor * w(k, j);
                if (!inv(k, j).is_zero()) inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

// ------------------------------------------------------------ permutations

PermutationMatrix::PermutationMatrix(std::vector<std::size_t> image) : image_(std::move(image)) {
    if (image_.empty()) throw DimensionError("permutation of size zero");
    std::vector<bool> hit(image_.size(), false);
    for (auto j : image_) {
        if (j >= image_.size() || hit[j]) throw DimensionError("index map is not a bijection");
        hit[j] = true;
    }
}

PermutationMatrix PermutationMatrix::identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    return PermutationMatrix(std::move(img));
}

bool PermutationMatrix::is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != i) return false;
    }
    return true;
}

PermutationMatrix PermutationMatrix::transpose() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return PermutationMatrix(std::move(inv));
}

int PermutationMatrix::sign() const {
    std::vector<bool> seen(image_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

RatMatrix PermutationMatrix::to_matrix() const {
    RatMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) m(i, image_[i]) = RationalFunction(1L);
    return m;
}

RatMatrix PermutationMatrix::apply_rows(const RatMatrix& a) const {
    if (a.rows() != size()) throw DimensionError("permutation size does not match matrix rows");
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(image_[i], j);
    }
    return r;
}

RatMatrix PermutationMatrix::apply_cols_transposed(const RatMatrix& a) const {
    if (a.cols() != size()) throw DimensionError("permutation size does not match matrix columns");
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, image_[j]);
    }
    return r;
}

RatMatrix PermutationMatrix::conjugate(const RatMatrix& a) const {
    return apply_cols_transposed(apply_rows(a));
}

PermutationMatrix perfect_shuffle(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw DimensionError("perfect shuffle needs positive dimensions");
    std::vector<std::size_t> img(m * n);
    // Row a*m + b carries its 1 in column b*n + a.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < m; ++b) img[a * m + b] = b * n + a;
    }
    return PermutationMatrix(std::move(img));
}

}  // namespace polymf
