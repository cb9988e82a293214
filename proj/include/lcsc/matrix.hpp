#pragma once

#include "lcsc/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

namespace lcsc {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the rationals.
///
/// Linear maps act on column vectors: a matrix with `rows() == dim(target)`
/// and `cols() == dim(source)`. Zero-sized dimensions are allowed and behave
/// as maps to or from the zero space.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionMismatch("ragged row");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("ragged column");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<Vector> columns() const {
        std::vector<Vector> out;
        out.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
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
    Matrix& operator*=(const Scalar& c) {
        for (auto& x : data_) x *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
    friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
    friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vector operator*(const Matrix& a, const Vector& v) {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape");
        Vector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Places `b` to the right of `a`.
    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw DimensionMismatch("hstack rows");
        Matrix m(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
        }
        return m;
    }

    /// Places `b` below `a`.
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw DimensionMismatch("vstack cols");
        Matrix m(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, j) = b(i, j);
        return m;
    }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && sgn((*this)(p, c)) == 0) ++p;
            if (p == rows_) continue;
            swap_rows(p, r);
            Scalar inv = 1 / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || sgn((*this)(i, c)) == 0) continue;
                Scalar f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::pair<Matrix, std::vector<std::size_t>> rref() const {
        Matrix m = *this;
        auto piv = m.rref_in_place();
        return {std::move(m), std::move(piv)};
    }

    std::size_t rank() const { return rref().second.size(); }

    /// Basis of the null space, one vector per free column, in column order.
    std::vector<Vector> kernel() const {
        auto [r, piv] = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : piv) is_pivot[p] = true;
        std::vector<Vector> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            Vector v(cols_);
            v[f] = 1;
            for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Scalar determinant() const {
        if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
        Matrix m = *this;
        Scalar det = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && sgn(m(p, c)) == 0) ++p;
            if (p == rows_) return 0;
            if (p != c) {
                m.swap_rows(p, c);
                det = -det;
            }
            det *= m(c, c);
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (sgn(m(i, c)) == 0) continue;
                Scalar f = m(i, c) / m(c, c);
                for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
            }
        }
        return det;
    }

    Matrix inverse() const {
        if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
        Matrix aug = hstack(*this, identity(rows_));
        auto piv = aug.rref_in_place();
        if (piv.size() < rows_ || (rows_ > 0 && piv.back() >= cols_)) throw SingularMatrix("matrix is not invertible");
        Matrix inv(rows_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    /// Sub-matrix on the given row and column index lists.
    Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix m(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
        }
        return os << "]";
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

inline Scalar dot(const Vector& a, const Vector& b) {
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// True iff the symmetric matrix is positive definite (all leading principal minors > 0).
inline bool is_positive_definite(const Matrix& g) {
    if (g.rows() != g.cols()) return false;
    if (!(g == g.transpose())) return false;
    for (std::size_t k = 1; k <= g.rows(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        if (sgn(g.select(idx, idx).determinant()) <= 0) return false;
    }
    return true;
}

}  // namespace lcsc
