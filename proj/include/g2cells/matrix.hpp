#ifndef G2CELLS_MATRIX_HPP
#define G2CELLS_MATRIX_HPP

#include "g2cells/rational.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace g2cells {

/// Dense row-major matrix over an exact commutative ring T.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix block(std::size_t nrows, std::size_t ncols) const {
        Matrix b(nrows, ncols);
        for (std::size_t r = 0; r < nrows; ++r)
            for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(r, c);
        return b;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!((*this)(r, c) == T(0))) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!(b(k, j) == T(0))) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& v : m.data_) v = s * v;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Commutator ab - ba.
    friend Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

    bool is_upper_triangular() const {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < r && c < cols_; ++c)
                if (!((*this)(r, c) == T(0))) return false;
        return true;
    }
    bool is_lower_triangular() const { return transpose().is_upper_triangular(); }
    bool has_unit_diagonal() const {
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
            if (!((*this)(i, i) == T(1))) return false;
        return true;
    }
    bool is_strictly_upper() const {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c <= r && c < cols_; ++c)
                if (!((*this)(r, c) == T(0))) return false;
        return true;
    }
    bool is_strictly_lower() const { return transpose().is_strictly_upper(); }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
        os << "]\n";
    }
    return os;
}

using RationalMatrix = Matrix<Rational>;

/*
 * Fraction-free (Bareiss) elimination on a copy of M. Works column by
 * column, skipping columns without a nonzero pivot, so it handles
 * rectangular and singular input. Returns the rank; the last pivot is the
 * determinant up to the sign of the row swaps when M is square and regular.
 */
struct BareissResult {
    std::size_t rank = 0;
    Rational last_pivot = 1;
    int swap_sign = 1;
};

inline BareissResult bareiss_eliminate(RationalMatrix M) {
    BareissResult res;
    const std::size_t n = M.rows(), m = M.cols();
    Rational prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t p = row;
        while (p < n && M(p, col) == 0) ++p;
        if (p == n) continue;
        if (p != row) {
            for (std::size_t c = 0; c < m; ++c) std::swap(M(p, c), M(row, c));
            res.swap_sign = -res.swap_sign;
        }
        const Rational pivot = M(row, col);
        for (std::size_t i = row + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < m; ++j) M(i, j) = (M(i, j) * pivot - M(i, col) * M(row, j)) / prev;
            M(i, col) = 0;
        }
        prev = pivot;
        res.last_pivot = pivot;
        ++row;
    }
    res.rank = row;
    return res;
}

inline std::size_t rank(const RationalMatrix& M) { return bareiss_eliminate(M).rank; }

inline Rational determinant(const RationalMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (M.rows() == 0) return 1;
    const auto r = bareiss_eliminate(M);
    if (r.rank < M.rows()) return 0;
    return r.swap_sign * r.last_pivot;
}

/// Gauss-Jordan inverse; throws std::domain_error when M is singular.
inline RationalMatrix inverse(const RationalMatrix& M) {
    const std::size_t n = M.rows();
    if (M.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
    RationalMatrix a = M;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        if (p != c)
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a(p, k), a(c, k));
                std::swap(inv(p, k), inv(c, k));
            }
        const Rational piv = a(c, c);
        for (std::size_t k = 0; k < n; ++k) {
            a(c, k) /= piv;
            inv(c, k) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            const Rational f = a(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                a(r, k) -= f * a(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

/// Solves A x = b for a consistent (possibly overdetermined) system with
/// full column rank. Returns nullopt when the system is inconsistent or
/// underdetermined.
inline std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& A, const std::vector<Rational>& b) {
    const std::size_t n = A.rows(), m = A.cols();
    if (b.size() != n) throw std::invalid_argument("solve_exact: size mismatch");
    RationalMatrix aug(n, m + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < m; ++c) aug(r, c) = A(r, c);
        aug(r, m) = b[r];
    }
    std::size_t row = 0;
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = row;
        while (p < n && aug(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != row)
            for (std::size_t k = 0; k <= m; ++k) std::swap(aug(p, k), aug(row, k));
        const Rational piv = aug(row, c);
        for (std::size_t k = 0; k <= m; ++k) aug(row, k) /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || aug(r, c) == 0) continue;
            const Rational f = aug(r, c);
            for (std::size_t k = 0; k <= m; ++k) aug(r, k) -= f * aug(row, k);
        }
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (aug(r, m) != 0) return std::nullopt;
    std::vector<Rational> x(m);
    for (std::size_t c = 0; c < m; ++c) x[c] = aug(c, m);
    return x;
}

/*
 * Rank profile r(i,j) = rank of the top-left i x j block, for 0 <= i <= rows
 * and 0 <= j <= cols, and the 0/1 matrix it determines:
 * P(i,j) = 1 iff r(i+1,j+1) - r(i,j+1) - r(i+1,j) + r(i,j) = 1.
 * For M = L P U with L lower and U upper triangular invertible, P is
 * recovered exactly.
 */
inline Matrix<int> rank_profile_permutation(const RationalMatrix& M) {
    const std::size_t n = M.rows(), m = M.cols();
    std::vector<std::vector<std::size_t>> r(n + 1, std::vector<std::size_t>(m + 1, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) r[i][j] = rank(M.block(i, j));
    Matrix<int> P(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const long d = static_cast<long>(r[i + 1][j + 1]) - static_cast<long>(r[i][j + 1]) -
                           static_cast<long>(r[i + 1][j]) + static_cast<long>(r[i][j]);
            if (d != 0 && d != 1) throw std::logic_error("rank profile: non-permutation increment");
            P(i, j) = static_cast<int>(d);
        }
    return P;
}

} // namespace g2cells

#endif // G2CELLS_MATRIX_HPP
