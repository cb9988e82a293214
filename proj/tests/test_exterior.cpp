#include "lcsc/form_space.hpp"
#include "lcsc/symplectic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lcsc;

namespace {

Form random_form(std::mt19937& rng, int m, int h) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Vector v(exterior_basis(m).size(h));
    for (auto& x : v) x = coef(rng);
    return Form::from_vector(m, h, v);
}

Form omega4() { return parse_form("e12+e34", 4); }

// J e1 = e2, J e2 = -e1, J e3 = e4, J e4 = -e3 on vectors.
AlmostComplexStructure standard_j(int m) {
    Matrix j(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m); i += 2) {
        j(i + 1, i) = 1;
        j(i, i + 1) = -1;
    }
    return AlmostComplexStructure(j);
}

Form omega_ot() { return parse_form("2*e13+e14+e23+2*e24+e56", 6); }

}  // namespace

TEST(CanonicalSign, SortsAndDetectsRepeats) {
    auto [a, sa] = canonical_sign({1, 2}, 4);
    EXPECT_EQ(a, MultiIndex::from_sorted({1, 2}));
    EXPECT_EQ(sa, 1);
    auto [b, sb] = canonical_sign({2, 1}, 4);
    EXPECT_EQ(b, MultiIndex::from_sorted({1, 2}));
    EXPECT_EQ(sb, -1);
    EXPECT_EQ(canonical_sign({1, 1}, 4).second, 0);
    EXPECT_EQ(canonical_sign({3, 1, 2}, 4).second, 1);
    EXPECT_THROW(canonical_sign({5}, 4), IndexOutOfRange);
    EXPECT_THROW(canonical_sign({0}, 4), IndexOutOfRange);
}

TEST(Wedge, Examples) {
    EXPECT_EQ(wedge(parse_form("e1", 4), parse_form("e2", 4)), parse_form("e12", 4));
    EXPECT_EQ(wedge(omega4(), omega4()), parse_form("2*e1234", 4));
    EXPECT_TRUE(wedge(parse_form("e12", 4), parse_form("e12", 4)).is_zero());
    EXPECT_TRUE(wedge(parse_form("e123", 4), parse_form("e34", 4)).is_zero());
}

TEST(Wedge, GradedCommutativity) {
    std::mt19937 rng(7);
    for (int m : {4, 6})
        for (int p = 0; p <= m; ++p)
            for (int q = 0; p + q <= m; ++q) {
                Form a = random_form(rng, m, p), b = random_form(rng, m, q);
                Scalar s = ((p * q) % 2) ? -1 : 1;
                EXPECT_EQ(wedge(a, b), s * wedge(b, a)) << m << " " << p << " " << q;
            }
}

TEST(ParseForm, RoundTripAndErrors) {
    for (std::string s : {"e12+e34", "-1/2*e135", "3", "e1-2*e2"}) EXPECT_EQ(parse_form(s, 6).to_string(), s);
    EXPECT_EQ(parse_form("e21", 4), parse_form("-e12", 4));
    EXPECT_EQ(parse_form("e{1,10}", 10).to_string(), "e1,10");
    EXPECT_THROW(parse_form("e12+", 4), ParseError);
    EXPECT_THROW(parse_form("e12+e3", 4), ParseError);
    EXPECT_THROW(parse_form("x", 4), ParseError);
    EXPECT_THROW(parse_form("e5", 4), IndexOutOfRange);
}

TEST(InteriorProduct, Convention) {
    Matrix p(4, 4);
    p(0, 1) = 1;
    p(1, 0) = -1;
    Bivector e12(p);
    EXPECT_EQ(interior_product(e12, parse_form("e12", 4)), Form::constant(4, 1));
    EXPECT_EQ(interior_product(e12, parse_form("e123", 4)), parse_form("e3", 4));
    EXPECT_TRUE(interior_product(e12, parse_form("e1", 4)).is_zero());
    EXPECT_TRUE(interior_product(e12, Form::constant(4, 5)).is_zero());
}

TEST(OmegaInverse, SignAndScaling) {
    Bivector pi = omega_inverse(omega4());
    EXPECT_EQ(pi(1, 2), Scalar(1));
    EXPECT_EQ(pi(3, 4), Scalar(1));
    EXPECT_EQ(interior_product(pi, omega4()), Form::constant(4, 2));
    Bivector scaled = omega_inverse(Scalar(3) * omega4());
    EXPECT_EQ(scaled.matrix(), Scalar(1, 3) * pi.matrix());
    EXPECT_THROW(omega_inverse(parse_form("e12", 4)), DegenerateForm);
}

TEST(Lefschetz, LambdaOfOmegaAndH) {
    auto lt = lefschetz_operators(omega4());
    EXPECT_EQ(lt.Lambda.apply(omega4()), Form::constant(4, -2));
    for (int h = 0; h <= 4; ++h) EXPECT_EQ(lt.H.block(h), Scalar(2 - h) * Matrix::identity(exterior_basis(4).size(h))) << h;
    EXPECT_TRUE((lt.L * lt.L).block(3).is_zero());
}

TEST(Lefschetz, HIsNMinusHForCatalogForms) {
    for (const Form& w : {omega4(), Scalar(5, 2) * omega4(), omega_ot()}) {
        int m = w.dimension(), n = m / 2;
        auto lt = lefschetz_operators(w);
        for (int h = 0; h <= m; ++h) EXPECT_EQ(lt.H.block(h), Scalar(n - h) * Matrix::identity(exterior_basis(m).size(h)));
    }
}

TEST(Lefschetz, DecomposeReassembles) {
    std::mt19937 rng(11);
    for (const Form& w : {omega4(), omega_ot()}) {
        int m = w.dimension(), n = m / 2;
        auto lt = lefschetz_operators(w);
        for (int h = 0; h <= m; ++h)
            for (int trial = 0; trial < 3; ++trial) {
                Form a = random_form(rng, m, h);
                Form sum(m, h);
                for (const auto& [r, ar] : lefschetz_decompose(w, a)) {
                    sum += power(lt.L, r).apply(ar);
                    EXPECT_TRUE(lt.Lambda.apply(ar).is_zero());
                    EXPECT_TRUE(power(lt.L, n - ar.degree() + 1).apply(ar).is_zero());
                }
                EXPECT_EQ(sum, a);
            }
    }
    auto parts = lefschetz_decompose(omega4(), omega4());
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].first, 1);
    EXPECT_EQ(parts[0].second, Form::constant(4, 1));
    Form prim = parse_form("e12-e34", 4);
    parts = lefschetz_decompose(omega4(), prim);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].first, 0);
}

TEST(SymplecticStar, VolumeAndInvolution) {
    EXPECT_EQ(symplectic_star(omega4(), Form::constant(4, 1)), parse_form("e1234", 4));
    for (const Form& w : {omega4(), omega_ot(), Scalar(-3) * omega4()}) {
        auto star = symplectic_star_operator(w);
        int m = w.dimension();
        for (int h = 0; h <= m; ++h) EXPECT_EQ(compose(star, star, h), Matrix::identity(exterior_basis(m).size(h))) << h;
    }
}

TEST(HodgeStar, StandardMetric) {
    Metric g(Matrix::identity(4));
    EXPECT_EQ(hodge_star(g, parse_form("e1", 4)), parse_form("e234", 4));
    EXPECT_EQ(hodge_star(g, parse_form("e12", 4)), parse_form("e34", 4));
    EXPECT_EQ(hodge_star(g, Form::constant(4, 1)), parse_form("e1234", 4));
    auto star = hodge_star_operator(g);
    for (int h = 0; h <= 4; ++h)
        EXPECT_EQ(compose(star, star, h), Scalar(h % 2 ? -1 : 1) * Matrix::identity(exterior_basis(4).size(h)));
}

TEST(HodgeStar, NonOrthonormalMetric) {
    Matrix gm(4, 4);
    gm(0, 0) = 4;
    gm(1, 1) = 1;
    gm(2, 2) = 9;
    gm(3, 3) = 1;
    gm(0, 1) = gm(1, 0) = 0;
    Metric g(gm);
    EXPECT_EQ(g.volume_factor(), Scalar(6));
    auto star = hodge_star_operator(g);
    for (int h = 0; h <= 4; ++h)
        EXPECT_EQ(compose(star, star, h), Scalar(h % 2 ? -1 : 1) * Matrix::identity(exterior_basis(4).size(h)));
    // b ∧ ∗a = <b, a> vol for random pairs
    std::mt19937 rng(3);
    auto gram = g.form_gram();
    for (int h = 0; h <= 4; ++h) {
        Form a = random_form(rng, 4, h), b = random_form(rng, 4, h);
        Scalar ip = dot(b.to_vector(), gram.block(h) * a.to_vector());
        EXPECT_EQ(wedge(b, star.apply(a)), parse_form("e1234", 4) * (ip * 6));
    }
}

TEST(HodgeStar, Errors) {
    Matrix bad = Matrix::identity(4);
    bad(2, 2) = -1;
    EXPECT_THROW(Metric{bad}, NotPositiveDefinite);
    Matrix irr = Matrix::identity(4);
    irr(0, 0) = 2;
    EXPECT_THROW(hodge_star_operator(Metric(irr)), IrrationalVolume);
}

TEST(JOnForms, StandardStructure) {
    auto j = standard_j(4);
    EXPECT_EQ(j_on_forms(j, parse_form("e1", 4)), parse_form("e2", 4));
    EXPECT_EQ(j_on_forms(j, parse_form("e3", 4)), parse_form("e4", 4));
    EXPECT_EQ(j_on_forms(j, parse_form("e12", 4)), wedge(j_on_forms(j, parse_form("e1", 4)), j_on_forms(j, parse_form("e2", 4))));
    auto jop = j_operator(j);
    for (int h = 0; h <= 4; ++h)
        EXPECT_EQ((jop * jop).block(h), Scalar(h % 2 ? -1 : 1) * Matrix::identity(exterior_basis(4).size(h)));
    EXPECT_TRUE(is_compatible(omega4(), j));
    EXPECT_EQ(associated_metric(omega4(), j).gram(), Matrix::identity(4));
}

TEST(StarRelation, SymplecticIsJHodge) {
    auto j = standard_j(4);
    Metric g = associated_metric(omega4(), j);
    auto sym = symplectic_star_operator(omega4());
    auto hodge = hodge_star_operator(g);
    auto jop = j_operator(j);
    for (int h = 0; h <= 4; ++h) EXPECT_EQ(sym.block(h), jop.block(4 - h) * hodge.block(h)) << h;
}

TEST(SubspaceOps, Examples) {
    auto r = subspace_ops(4, 1, {parse_form("e1", 4)}, {parse_form("e2", 4)});
    EXPECT_TRUE(r.intersection.empty());
    r = subspace_ops(4, 1, {parse_form("e1", 4), parse_form("e2", 4)}, {parse_form("e2", 4), parse_form("e3", 4)});
    EXPECT_EQ(r.sum.size(), 3u);
    EXPECT_EQ(form_span(4, 1, r.sum), form_span(4, 1, {parse_form("e1", 4), parse_form("e2", 4), parse_form("e3", 4)}));
    Subspace u = form_span(4, 1, {parse_form("e1", 4), parse_form("e2", 4)});
    Subspace d = form_span(4, 1, {parse_form("e1+e2", 4)});
    EXPECT_EQ(quotient_dim(u, d), 1u);
    auto q = u.complement_of(d);
    ASSERT_EQ(q.dim(), 1u);
    EXPECT_EQ(Form::from_vector(4, 1, q.basis()[0]), parse_form("e1-e2", 4));
}

TEST(SubspaceOps, DimensionFormula) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-2, 2), count(0, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vector> a(static_cast<std::size_t>(count(rng))), b(static_cast<std::size_t>(count(rng)));
        for (auto* s : {&a, &b})
            for (auto& v : *s) {
                v.resize(6);
                for (auto& x : v) x = coef(rng);
            }
        Subspace u = Subspace::span(6, a), v = Subspace::span(6, b);
        EXPECT_EQ(sum(u, v).dim() + intersection(u, v).dim(), u.dim() + v.dim());
        EXPECT_TRUE(u.contains(intersection(u, v)));
        EXPECT_TRUE(sum(u, v).contains(v));
    }
}
