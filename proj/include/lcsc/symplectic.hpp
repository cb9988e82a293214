#pragma once

#include "lcsc/exterior.hpp"
#include "lcsc/subspace.hpp"

#include <vector>

namespace lcsc {

/// Almost-complex structure, stored as its matrix on vectors (columns are J e_i).
class AlmostComplexStructure {
public:
    AlmostComplexStructure() = default;
    explicit AlmostComplexStructure(Matrix j) : j_(std::move(j)) {
        if (j_.rows() != j_.cols() || !(j_ * j_ == -Matrix::identity(j_.rows())))
            throw DimensionMismatch("almost-complex structure must satisfy J^2 = -id");
    }
    int dimension() const noexcept { return static_cast<int>(j_.rows()); }
    const Matrix& on_vectors() const noexcept { return j_; }

    /// Matrix on 1-form coefficients: (Jα)(X) = α(J^{-1}X).
    Matrix on_covectors() const { return (-j_).transpose(); }

private:
    Matrix j_;
};

/// Positive-definite Gram matrix g_ij = g(e_i, e_j).
class Metric {
public:
    Metric() = default;
    explicit Metric(Matrix g) : g_(std::move(g)) {
        if (!is_positive_definite(g_)) throw NotPositiveDefinite("Gram matrix is not symmetric positive definite");
    }
    int dimension() const noexcept { return static_cast<int>(g_.rows()); }
    const Matrix& gram() const noexcept { return g_; }

    /// Induced inner product on ∧^h, monomial basis (Gram determinants of g^{-1}).
    GradedOperator form_gram() const { return GradedOperator::exterior_power(g_.inverse()); }

    /// sqrt(det g); throws IrrationalVolume when not rational.
    Scalar volume_factor() const {
        Scalar det = g_.determinant();
        Integer num = det.get_num(), den = det.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            throw IrrationalVolume("sqrt(det g) = sqrt(" + det.get_str() + ") is not rational");
        return Scalar(sqrt(num), sqrt(den));
    }

private:
    Matrix g_;
};

/// Top-degree pairing: (e^I ∧ e^K) = W(I,K) e^{1…m} with I in ∧^h, K in ∧^{m-h}.
inline Matrix top_pairing(int m, int h) {
    const auto& B = exterior_basis(m);
    Matrix w(B.size(h), B.size(m - h));
    for (std::size_t r = 0; r < B.size(h); ++r)
        for (std::size_t c = 0; c < B.size(m - h); ++c)
            w(r, c) = wedge_sign(B.at(h, r).mask(), B.at(m - h, c).mask());
    return w;
}

/// Pfaffian of a skew matrix (zero for odd size).
inline Scalar pfaffian(const Matrix& w) {
    std::size_t n = w.rows();
    if (n % 2) return 0;
    if (n == 0) return 1;
    // expansion along the first row
    Scalar total = 0;
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < n; ++j) {
        if (sgn(w(0, j)) == 0) continue;
        rest.clear();
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) rest.push_back(k);
        Scalar term = w(0, j) * pfaffian(w.select(rest, rest));
        total += (j % 2 == 1) ? term : Scalar(-term);
    }
    return total;
}

/// The bivector Ω^{-1}, normalized so that ι_{Ω^{-1}} Ω = n (equivalently H·1 = n).
inline Bivector omega_inverse(const Form& omega) {
    Matrix w = two_form_matrix(omega);
    if (w.rows() % 2 || w.determinant() == 0) throw DegenerateForm("2-form " + omega.to_string() + " is degenerate");
    return Bivector(w.inverse().transpose());
}

struct LefschetzTriple {
    GradedOperator L;       // Ω ∧ ·
    GradedOperator Lambda;  // −ι_{Ω^{-1}}
    GradedOperator H;       // [L, Λ]
};

inline LefschetzTriple lefschetz_operators(const Form& omega) {
    Bivector pi = omega_inverse(omega);
    LefschetzTriple t;
    t.L = wedge_operator(omega);
    t.Lambda = -interior_operator(pi);
    t.H = commutator(t.L, t.Lambda);
    return t;
}

inline GradedOperator power(const GradedOperator& op, int r) {
    GradedOperator out = GradedOperator::identity(op.dimension());
    for (int i = 0; i < r; ++i) out = op * out;
    return out;
}

/// Unique a = Σ_r L^r a_r with a_r primitive (Λ a_r = 0). Zero components are omitted.
inline std::vector<std::pair<int, Form>> lefschetz_decompose(const Form& omega, const Form& a) {
    auto lt = lefschetz_operators(omega);
    int m = a.dimension(), h = a.degree();
    const auto& B = exterior_basis(m);
    std::vector<Vector> cols;
    std::vector<std::pair<int, std::vector<Vector>>> prim;  // (r, basis of P^{h-2r})
    for (int r = 0; 2 * r <= h; ++r) {
        int j = h - 2 * r;
        if (j > m / 2) continue;  // no nonzero primitives above the middle degree
        auto basis = lt.Lambda.block_or_zero(j).kernel();
        Matrix Lr = power(lt.L, r).block(j);
        for (const auto& p : basis) cols.push_back(Lr * p);
        prim.emplace_back(r, std::move(basis));
    }
    Matrix sys = Matrix::hstack(Matrix::from_columns(cols, B.size(h)), Matrix::from_columns({a.to_vector()}, B.size(h)));
    auto [R, piv] = sys.rref();
    if (!piv.empty() && piv.back() == cols.size()) throw Error("Lefschetz decomposition failed to span");
    Vector coef(cols.size());
    for (std::size_t i = 0; i < piv.size(); ++i) coef[piv[i]] = R(i, cols.size());
    std::vector<std::pair<int, Form>> out;
    std::size_t at = 0;
    for (const auto& [r, basis] : prim) {
        int j = h - 2 * r;
        Vector v(B.size(j));
        for (const auto& p : basis) {
            for (std::size_t t = 0; t < v.size(); ++t) v[t] += coef[at] * p[t];
            ++at;
        }
        Form fr = Form::from_vector(m, j, v);
        if (!fr.is_zero()) out.emplace_back(r, std::move(fr));
    }
    return out;
}

/// Pairing on forms induced by Ω^{-1}: G(e^I, e^J) = det(π^{ij})_{i∈I, j∈J}.
inline GradedOperator symplectic_pairing(const Form& omega) {
    return GradedOperator::exterior_power(omega_inverse(omega).matrix());
}

/// An operator ∧^h → ∧^{m−h} for every h (stars).
class StarOperator {
public:
    StarOperator() = default;
    StarOperator(int m, std::vector<Matrix> blocks) : m_(m), blocks_(std::move(blocks)) {
        if (blocks_.size() != static_cast<std::size_t>(m) + 1) throw DimensionMismatch("star needs m+1 blocks");
    }
    int dimension() const noexcept { return m_; }
    const Matrix& block(int h) const { return blocks_.at(static_cast<std::size_t>(h)); }

    Form apply(const Form& a) const {
        if (a.dimension() != m_) throw DimensionMismatch("star and form dimensions differ");
        return Form::from_vector(m_, m_ - a.degree(), block(a.degree()) * a.to_vector());
    }

    /// a ∘ b on degree h (a degree-preserving matrix).
    friend Matrix compose(const StarOperator& a, const StarOperator& b, int h) {
        return a.block(b.m_ - h) * b.block(h);
    }

    friend bool operator==(const StarOperator& a, const StarOperator& b) { return a.m_ == b.m_ && a.blocks_ == b.blocks_; }

private:
    int m_ = 0;
    std::vector<Matrix> blocks_;
};

/// S_h = c·W_hᵀ·Pᵀ, so that b ∧ S_h a = P(a, b)·c·e^{1…m}.
inline StarOperator star_from_pairing(const GradedOperator& pairing, const Scalar& c) {
    int m = pairing.dimension();
    std::vector<Matrix> blocks;
    for (int h = 0; h <= m; ++h) blocks.push_back(c * (top_pairing(m, h).transpose() * pairing.block(h).transpose()));
    return StarOperator(m, std::move(blocks));
}

/// Symplectic star: b ∧ ⋆a = G(a, b)·Ω^n/n!, with G from symplectic_pairing.
inline StarOperator symplectic_star_operator(const Form& omega) {
    Scalar pf = pfaffian(two_form_matrix(omega));  // Ω^n/n! = Pf(ω)·e^{1…m}
    return star_from_pairing(symplectic_pairing(omega), pf);
}

inline Form symplectic_star(const Form& omega, const Form& a) { return symplectic_star_operator(omega).apply(a); }

/// Hodge star: b ∧ ∗a = ⟨b, a⟩_g·vol_g, vol_g = orientation·sqrt(det g)·e^{1…m}.
inline StarOperator hodge_star_operator(const Metric& g, int orientation = 1) {
    return star_from_pairing(g.form_gram(), Scalar(orientation) * g.volume_factor());
}

inline Form hodge_star(const Metric& g, const Form& a, int orientation = 1) { return hodge_star_operator(g, orientation).apply(a); }

inline GradedOperator j_operator(const AlmostComplexStructure& j) { return GradedOperator::exterior_power(j.on_covectors()); }

inline Form j_on_forms(const AlmostComplexStructure& j, const Form& a) { return j_operator(j).apply(a); }

/// Ω(J·, J·) = Ω.
inline bool is_compatible(const Form& omega, const AlmostComplexStructure& j) {
    Matrix w = two_form_matrix(omega);
    return j.on_vectors().transpose() * w * j.on_vectors() == w;
}

/// g = Ω(·, J·), as a Gram matrix; throws NotPositiveDefinite when it is not a metric.
inline Metric associated_metric(const Form& omega, const AlmostComplexStructure& j) {
    return Metric(two_form_matrix(omega) * j.on_vectors());
}

}  // namespace lcsc
