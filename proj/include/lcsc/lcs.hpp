#pragma once

#include "lcsc/liealg.hpp"
#include "lcsc/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcsc {

LCSC_DEFINE_ERROR(NotLcs);
LCSC_DEFINE_ERROR(LeeFormNotClosed);
LCSC_DEFINE_ERROR(IncompatibleTriple);

/// A + k·B, shift s.
class OperatorPencil {
public:
    OperatorPencil() = default;
    OperatorPencil(GradedOperator constant, GradedOperator linear) : a_(std::move(constant)), b_(std::move(linear)) {
        if (a_.dimension() != b_.dimension() || a_.shift() != b_.shift()) throw DimensionMismatch("pencil parts differ in shape");
    }
    int dimension() const noexcept { return a_.dimension(); }
    int shift() const noexcept { return a_.shift(); }
    const GradedOperator& constant_part() const noexcept { return a_; }
    const GradedOperator& linear_part() const noexcept { return b_; }

    GradedOperator at(const Scalar& k) const { return a_ + k * b_; }

private:
    GradedOperator a_, b_;
};

/// θ with dΩ = θ∧Ω; verifies dθ = 0.
inline Form lee_form(const LieAlgebra& g, const Form& omega) {
    int m = g.dimension();
    if (omega.dimension() != m || omega.degree() != 2) throw DimensionMismatch("Ω must be a 2-form in dimension m");
    omega_inverse(omega);  // nondegeneracy
    Form domega = ce_apply(g, omega);
    // columns: e^i ∧ Ω; solved for the coefficients of θ, free variables set to 0 (only when m = 2)
    Matrix sys = Matrix::hstack(wedge_operator(omega).block_or_zero(1), Matrix::from_columns({domega.to_vector()}, exterior_basis(m).size(3)));
    auto [r, piv] = sys.rref();
    auto n = static_cast<std::size_t>(m);
    if (!piv.empty() && piv.back() == n) throw NotLcs("dΩ = " + domega.to_string() + " is not of the form θ∧Ω");
    Vector theta(n);
    for (std::size_t i = 0; i < piv.size(); ++i) theta[piv[i]] = r(i, n);
    Form t = Form::from_vector(m, 1, theta);
    Form dt = ce_apply(g, t);
    if (!dt.is_zero()) throw LeeFormNotClosed("θ = " + t.to_string() + " has dθ = " + dt.to_string());
    return t;
}

/// Compatible almost-complex structure with its metric g = Ω(·, J·).
struct CompatibleTriple {
    AlmostComplexStructure j;
    Metric g;
    std::string source;  // "catalog", "file" or "synthesized"
};

/// Columns u_1, v_1, …, u_n, v_n with ω(u_i, v_i) = 1 and all other pairings 0.
inline Matrix darboux_basis(const Form& omega) {
    Matrix w = two_form_matrix(omega);
    std::size_t m = w.rows();
    if (m % 2 || w.determinant() == 0) throw DegenerateForm("2-form " + omega.to_string() + " is degenerate");
    auto pair = [&](const Vector& x, const Vector& y) { return dot(x, w * y); };
    std::vector<Vector> pool = Matrix::identity(m).columns();
    std::vector<Vector> out;
    while (!pool.empty()) {
        Vector u = pool.front();
        pool.erase(pool.begin());
        auto it = std::find_if(pool.begin(), pool.end(), [&](const Vector& x) { return sgn(pair(u, x)) != 0; });
        if (it == pool.end()) {
            if (is_zero(u)) continue;
            throw DegenerateForm("no symplectic partner found");
        }
        Vector v = *it;
        pool.erase(it);
        Scalar s = 1 / pair(u, v);
        for (auto& x : v) x *= s;
        for (auto& x : pool) {
            Scalar xv = pair(x, v), xu = pair(x, u);
            for (std::size_t i = 0; i < m; ++i) x[i] += -xv * u[i] + xu * v[i];
        }
        out.push_back(u);
        out.push_back(v);
    }
    return Matrix::from_columns(out, m);
}

/// Checks J² = −id, Ω(J·,J·) = Ω and g = Ω(·,J·) positive definite.
inline Metric validate_triple(const Form& omega, const AlmostComplexStructure& j) {
    if (!is_compatible(omega, j)) throw IncompatibleTriple("Ω(J·, J·) ≠ Ω");
    try {
        return associated_metric(omega, j);
    } catch (const NotPositiveDefinite&) {
        throw IncompatibleTriple("g = Ω(·, J·) is not symmetric positive definite");
    }
}

/// J u_i = v_i, J v_i = −u_i in a Darboux basis.
inline CompatibleTriple compatible_triple(const Form& omega) {
    Matrix p = darboux_basis(omega);
    std::size_t m = p.rows();
    Matrix j0(m, m);
    for (std::size_t i = 0; i + 1 < m; i += 2) {
        j0(i + 1, i) = 1;
        j0(i, i + 1) = -1;
    }
    AlmostComplexStructure j(p * j0 * p.inverse());
    return {j, validate_triple(omega, j), "synthesized"};
}

/// Validated lcs structure (algebra, Ω, θ) with optional compatible triple.
class LcsStructure {
public:
    /// Derives θ from Ω.
    static LcsStructure create(LieAlgebra g, Form omega, std::optional<AlmostComplexStructure> j = std::nullopt,
                               std::string triple_source = "catalog") {
        Form theta = lee_form(g, omega);
        return create(std::move(g), std::move(omega), std::move(theta), std::move(j), std::move(triple_source));
    }

    static LcsStructure create(LieAlgebra g, Form omega, Form theta, std::optional<AlmostComplexStructure> j = std::nullopt,
                               std::string triple_source = "catalog") {
        if (!check_jacobi(g)) throw JacobiFailure("d∘d ≠ 0");
        omega_inverse(omega);
        Form dt = ce_apply(g, theta);
        if (!dt.is_zero()) throw LeeFormNotClosed("dθ = " + dt.to_string());
        Form defect = ce_apply(g, omega) - wedge(theta, omega);
        if (!defect.is_zero()) throw NotLcs("dΩ − θ∧Ω = " + defect.to_string());
        LcsStructure s = unchecked(std::move(g), std::move(omega), std::move(theta));
        if (j) s.triple_ = CompatibleTriple{*j, validate_triple(s.omega_, *j), std::move(triple_source)};
        return s;
    }

    /// No validation beyond shapes; for probing how identities break.
    static LcsStructure unchecked(LieAlgebra g, Form omega, Form theta) {
        LcsStructure s;
        s.algebra_ = std::move(g);
        s.omega_ = std::move(omega);
        s.theta_ = std::move(theta);
        int m = s.algebra_.dimension();
        if (s.omega_.dimension() != m || s.omega_.degree() != 2 || s.theta_.dimension() != m || s.theta_.degree() != 1)
            throw DimensionMismatch("Ω and θ must be a 2-form and a 1-form in dimension m");
        return s;
    }

    const LieAlgebra& algebra() const noexcept { return algebra_; }
    const Form& omega() const noexcept { return omega_; }
    const Form& theta() const noexcept { return theta_; }
    int dimension() const noexcept { return algebra_.dimension(); }
    int half_dimension() const noexcept { return dimension() / 2; }
    const std::optional<CompatibleTriple>& given_triple() const noexcept { return triple_; }

    /// The given triple, or a synthesized one.
    CompatibleTriple triple() const { return triple_ ? *triple_ : compatible_triple(omega_); }

    /// sign(Pf ω): the orientation in which Ω^n/n! is positive.
    int orientation() const { return sgn(pfaffian(two_form_matrix(omega_))); }

private:
    LcsStructure() = default;
    LieAlgebra algebra_;
    Form omega_, theta_;
    std::optional<CompatibleTriple> triple_;
};

/// d_k = d − kθ∧.
inline OperatorPencil d_pencil(const LcsStructure& s) {
    return OperatorPencil(ce_differential(s.algebra()), -wedge_operator(s.theta()));
}

inline GradedOperator lambda_operator(const LcsStructure& s) { return lefschetz_operators(s.omega()).Lambda; }

/// δ_k = d_{k−1}Λ − Λd_k, expanded as (D−B)Λ − ΛD + k(BΛ − ΛB) for d_k = D + kB.
inline OperatorPencil delta_pencil(const LcsStructure& s) {
    OperatorPencil d = d_pencil(s);
    GradedOperator lam = lambda_operator(s);
    const auto& D = d.constant_part();
    const auto& B = d.linear_part();
    OperatorPencil delta((D - B) * lam - lam * D, B * lam - lam * B);
    // the k² terms cancel; compare with the unexpanded composition at a few weights
    for (int k : {-1, 0, 2}) {
        GradedOperator direct = d.at(k - 1) * lam - lam * d.at(k);
        if (!(direct == delta.at(k))) throw Error("δ pencil expansion disagrees with d_{k−1}Λ − Λd_k");
    }
    return delta;
}

struct IdentityCheck {
    std::string name;
    std::vector<int> failing_degrees;
    bool ok() const noexcept { return failing_degrees.empty(); }
};

struct IdentityReport {
    Scalar k;
    std::vector<IdentityCheck> checks;
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok(); });
    }
    const IdentityCheck& operator[](const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c;
        throw Error("no check named " + name);
    }
};

namespace detail {

inline IdentityCheck expect_equal(std::string name, const GradedOperator& lhs, const GradedOperator& rhs) {
    return {std::move(name), lhs.differing_degrees(rhs)};
}

inline IdentityCheck expect_zero(std::string name, const GradedOperator& op) {
    return expect_equal(std::move(name), op, GradedOperator(op.dimension(), op.shift()));
}

}  // namespace detail

/// (d_k)² = 0, δ_kδ_{k+1} = 0, d_{k−1}δ_k + δ_kd_k = 0.
inline IdentityReport verify_bidifferential(const LcsStructure& s, const Scalar& k) {
    auto d = d_pencil(s);
    auto delta = delta_pencil(s);
    auto dk = d.at(k), dk1 = d.at(k - 1), del = delta.at(k), del1 = delta.at(k + 1);
    return {k,
            {detail::expect_zero("d_k d_k = 0", dk * dk), detail::expect_zero("delta_k delta_{k+1} = 0", del * del1),
             detail::expect_zero("d_{k-1} delta_k + delta_k d_k = 0", dk1 * del + del * dk)}};
}

/// The four commutation relations plus d_k d_{k+1} = θ∧d.
inline IdentityReport verify_commutations(const LcsStructure& s, const Scalar& k) {
    auto d = d_pencil(s);
    auto delta = delta_pencil(s);
    auto lt = lefschetz_operators(s.omega());
    const auto& L = lt.L;
    const auto& Lam = lt.Lambda;
    GradedOperator theta_d = wedge_operator(s.theta()) * d.at(0);
    return {k,
            {detail::expect_zero("L d_k - d_{k+1} L = 0", L * d.at(k) - d.at(k + 1) * L),
             detail::expect_equal("L delta_k - delta_{k+1} L = d_k", L * delta.at(k) - delta.at(k + 1) * L, d.at(k)),
             detail::expect_zero("delta_{k-1} Lambda - Lambda delta_k = 0", delta.at(k - 1) * Lam - Lam * delta.at(k)),
             detail::expect_equal("d_{k-1} Lambda - Lambda d_k = delta_k", d.at(k - 1) * Lam - Lam * d.at(k), delta.at(k)),
             detail::expect_equal("d_k d_{k+1} = theta^d", d.at(k) * d.at(k + 1), theta_d)}};
}

/// d_k d_l = (l − k)·θ∧d.
inline IdentityCheck verify_product_rule(const LcsStructure& s, const Scalar& k, const Scalar& l) {
    auto d = d_pencil(s);
    return detail::expect_equal("d_k d_l = (l-k) theta^d", d.at(k) * d.at(l), (l - k) * (wedge_operator(s.theta()) * d.at(0)));
}

/// d_k(α∧β) = d_{k−h}α∧β + (−1)^{|α|} α∧d_hβ on all monomial pairs.
inline bool twisted_leibniz_check(const LcsStructure& s, const Scalar& k, const Scalar& h) {
    int m = s.dimension();
    auto d = d_pencil(s);
    auto dk = d.at(k), dkh = d.at(k - h), dh = d.at(h);
    const auto& B = exterior_basis(m);
    for (int p = 0; p <= m; ++p)
        for (int q = 0; p + q <= m; ++q)
            for (auto I : B.degree(p))
                for (auto J : B.degree(q)) {
                    Form a = Form::monomial(m, I.indices()), b = Form::monomial(m, J.indices());
                    Form lhs = dk.apply(wedge(a, b));
                    Form rhs = wedge(dkh.apply(a), b) + Scalar(p % 2 ? -1 : 1) * wedge(a, dh.apply(b));
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

/// Adjoint with respect to the metric induced on forms: block(h+s) = G_h^{-1} A_hᵀ G_{h+s}.
inline GradedOperator adjoint(const GradedOperator& op, const Metric& g) {
    int m = op.dimension(), s = op.shift();
    auto gram = g.form_gram();
    GradedOperator out(m, -s);
    for (int h = 0; h <= m; ++h) {
        int t = h + s;
        if (t < 0 || t > m) continue;
        out.block(t) = gram.block(h).inverse() * op.block(h).transpose() * gram.block(t);
    }
    return out;
}

/// J^{-1} d_k J.
inline GradedOperator dc_operator(const LcsStructure& s, const AlmostComplexStructure& j, const Scalar& k) {
    GradedOperator jop = j_operator(j);
    GradedOperator jinv = j_operator(AlmostComplexStructure(-j.on_vectors()));
    return jinv * d_pencil(s).at(k) * jop;
}

}  // namespace lcsc
