#pragma once

#include "lcsc/matrix.hpp"

#include <vector>

namespace lcsc {

/// A linear subspace of Q^N, stored by its reduced row echelon basis.
///
/// The RREF basis is canonical, so two subspaces are equal iff their stored
/// bases are equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors) {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        Matrix m = Matrix::from_rows(vectors, ambient);
        s.set_from_rows(std::move(m));
        return s;
    }

    static Subspace column_space(const Matrix& a) {
        Subspace s(a.rows());
        s.set_from_rows(a.transpose());
        return s;
    }

    static Subspace kernel_of(const Matrix& a) { return span(a.cols(), a.kernel()); }

    static Subspace whole(std::size_t ambient) {
        Subspace s(ambient);
        s.basis_ = Matrix::identity(ambient);
        return s;
    }

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis_rows() const noexcept { return basis_; }
    std::vector<Vector> basis() const {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    bool contains(const Vector& v) const {
        if (v.size() != ambient_) throw DimensionMismatch("subspace membership");
        if (is_zero(v)) return true;
        Matrix m = Matrix::vstack(basis_, Matrix::from_rows({v}, ambient_));
        return m.rank() == dim();
    }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw DimensionMismatch("subspace containment");
        if (o.dim() == 0) return true;
        return sum(*this, o).dim() == dim();
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw DimensionMismatch("subspace sum");
        Subspace s(a.ambient_);
        s.set_from_rows(Matrix::vstack(a.basis_, b.basis_));
        return s;
    }

    friend Subspace intersection(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw DimensionMismatch("subspace intersection");
        if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
        // x = A^T u = B^T w  <=>  [A^T | -B^T] (u, w) = 0
        Matrix sys = Matrix::hstack(a.basis_.transpose(), -b.basis_.transpose());
        std::vector<Vector> vecs;
        for (const auto& sol : sys.kernel()) {
            Vector u(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(a.dim()));
            vecs.push_back(a.basis_.transpose() * u);
        }
        return span(a.ambient_, vecs);
    }

    /// Image of the subspace under a linear map.
    Subspace image_under(const Matrix& map) const {
        if (map.cols() != ambient_) throw DimensionMismatch("image under map");
        Subspace s(map.rows());
        if (dim() == 0) return s;
        s.set_from_rows((map * basis_.transpose()).transpose());
        return s;
    }

    /// Basis of {x in *this : <x, y>_gram = 0 for all y in den}; `gram` is the
    /// inner product on the ambient space (identity when empty). This is the
    /// representative space for the quotient *this / den.
    Subspace complement_of(const Subspace& den, const Matrix& gram = Matrix()) const {
        if (den.ambient_ != ambient_) throw DimensionMismatch("quotient complement");
        if (den.dim() == 0) return *this;
        Matrix d = den.basis_;
        if (gram.rows() != 0) d = d * gram;
        Matrix sys = d * basis_.transpose();  // rows: constraints, cols: coefficients on *this basis
        std::vector<Vector> vecs;
        for (const auto& c : sys.kernel()) vecs.push_back(basis_.transpose() * c);
        return span(ambient_, vecs);
    }

private:
    void set_from_rows(Matrix m) {
        auto piv = m.rref_in_place();
        Matrix b(piv.size(), ambient_);
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) b(i, j) = m(i, j);
        basis_ = std::move(b);
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
};

/// Dimension of the quotient num / den after checking den is contained in num.
inline std::size_t quotient_dim(const Subspace& num, const Subspace& den) {
    if (!num.contains(den)) throw Error("quotient denominator is not contained in numerator");
    return num.dim() - den.dim();
}

}  // namespace lcsc
