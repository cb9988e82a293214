#pragma once

#include "lcsc/form_space.hpp"
#include "lcsc/lcs.hpp"
#include "lcsc/poly.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace lcsc {

LCSC_DEFINE_ERROR(NotUnimodular);
LCSC_DEFINE_ERROR(ClassNotClosed);
LCSC_DEFINE_ERROR(EulerViolation);

enum class Theory { deRham, delta, bottChern, aeppli };

inline constexpr std::array<Theory, 4> all_theories{Theory::deRham, Theory::delta, Theory::bottChern, Theory::aeppli};

/// Short names used in tables and on the command line: d, delta, bc, a.
inline std::string theory_name(Theory t) {
    switch (t) {
        case Theory::deRham: return "d";
        case Theory::delta: return "delta";
        case Theory::bottChern: return "bc";
        case Theory::aeppli: return "a";
    }
    return "?";
}

inline std::string theory_long_name(Theory t) {
    switch (t) {
        case Theory::deRham: return "deRham";
        case Theory::delta: return "delta";
        case Theory::bottChern: return "bottChern";
        case Theory::aeppli: return "aeppli";
    }
    return "?";
}

inline Theory parse_theory(const std::string& s) {
    for (Theory t : all_theories)
        if (s == theory_name(t) || s == theory_long_name(t)) return t;
    if (s == "dR" || s == "deRham") return Theory::deRham;
    if (s == "BC") return Theory::bottChern;
    if (s == "A") return Theory::aeppli;
    throw ParseError("unknown theory '" + s + "'", 0);
}

/// Comma list of theory names, or "all".
inline std::vector<Theory> parse_theories(const std::string& s) {
    if (s == "all") return {all_theories.begin(), all_theories.end()};
    std::vector<Theory> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        Theory t = parse_theory(s.substr(start, end - start));
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
        start = end + 1;
    }
    return out;
}

struct CohomologyGroup {
    Theory theory = Theory::deRham;
    int h = 0;
    Scalar k;
    int m = 0;
    Subspace numerator;
    Subspace denominator;
    Subspace representatives;  // orthogonal to the denominator under the monomial inner product

    std::size_t dim() const noexcept { return representatives.dim(); }
    std::vector<Form> basis() const { return forms_of(m, h, representatives); }
};

/// Pencils and Lefschetz data of a structure, with per-weight caches. Cheap to copy.
class LcsComplex {
public:
    LcsComplex(const LcsStructure& s)  // NOLINT(google-explicit-constructor)
        : st_(std::make_shared<State>(s)) {}

    const LcsStructure& structure() const noexcept { return st_->s; }
    int dimension() const noexcept { return st_->s.dimension(); }
    int half_dimension() const noexcept { return st_->s.half_dimension(); }
    const OperatorPencil& d_pencil() const noexcept { return st_->d; }
    const OperatorPencil& delta_pencil() const noexcept { return st_->delta; }
    const GradedOperator& L() const noexcept { return st_->lef.L; }
    const GradedOperator& Lambda() const noexcept { return st_->lef.Lambda; }

    GradedOperator d(const Scalar& k) const { return cached(st_->d_cache, st_->d, k); }
    GradedOperator delta(const Scalar& k) const { return cached(st_->delta_cache, st_->delta, k); }

    const CompatibleTriple& triple() const {
        std::call_once(st_->triple_once, [this] { st_->triple = st_->s.triple(); });
        return *st_->triple;
    }
    /// Adjoint in the triple's metric; same as adjoint(op, triple().g) with the Gram blocks cached.
    GradedOperator adjoint_of(const GradedOperator& op) const {
        GradedOperator gram = memo("gram", [&] { return triple().g.form_gram(); });
        GradedOperator inv = memo("gram^-1", [&] {
            GradedOperator r = gram;
            for (int h = 0; h <= dimension(); ++h) r.block(h) = gram.block(h).inverse();
            return r;
        });
        int m = op.dimension(), s = op.shift();
        GradedOperator out(m, -s);
        for (int h = 0; h <= m; ++h)
            if (h + s >= 0 && h + s <= m) out.block(h + s) = inv.block(h) * op.block(h).transpose() * gram.block(h + s);
        return out;
    }

    /// Memoized derived operator; `make` runs outside the lock.
    template <typename F>
    GradedOperator memo(const std::string& key, F&& make) const {
        {
            std::lock_guard lock(st_->mu);
            if (auto it = st_->memo.find(key); it != st_->memo.end()) return it->second;
        }
        GradedOperator op = make();
        std::lock_guard lock(st_->mu);
        return st_->memo.emplace(key, std::move(op)).first->second;
    }

private:
    struct State {
        explicit State(const LcsStructure& st)
            : s(st), d(lcsc::d_pencil(st)), delta(lcsc::delta_pencil(st)), lef(lefschetz_operators(st.omega())) {}
        LcsStructure s;
        OperatorPencil d, delta;
        LefschetzTriple lef;
        std::mutex mu;
        std::map<Scalar, GradedOperator> d_cache, delta_cache;
        std::map<std::string, GradedOperator> memo;
        std::once_flag triple_once;
        std::optional<CompatibleTriple> triple;
    };

    GradedOperator cached(std::map<Scalar, GradedOperator>& cache, const OperatorPencil& p, const Scalar& k) const {
        std::lock_guard lock(st_->mu);
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, p.at(k)).first;
        return it->second;
    }

    std::shared_ptr<State> st_;
};

namespace detail {

/// op restricted to ∧^h, correctly shaped even when h is out of range.
inline Matrix blk(const GradedOperator& op, int h) {
    const auto& B = exterior_basis(op.dimension());
    if (h < 0 || h > op.dimension()) return Matrix(B.size(h + op.shift()), B.size(h));
    return op.block(h);
}

inline std::size_t space_dim(int m, int h) { return exterior_basis(m).size(h); }

}  // namespace detail

inline Subspace cohomology_numerator(const LcsComplex& c, Theory t, int h, const Scalar& k) {
    using detail::blk;
    switch (t) {
        case Theory::deRham: return Subspace::kernel_of(blk(c.d(k), h));
        case Theory::delta: return Subspace::kernel_of(blk(c.delta(k), h));
        case Theory::bottChern: return Subspace::kernel_of(Matrix::vstack(blk(c.d(k), h), blk(c.delta(k), h)));
        case Theory::aeppli: return Subspace::kernel_of(blk(c.delta(k), h + 1) * blk(c.d(k), h));
    }
    throw Error("unknown theory");
}

inline Subspace cohomology_denominator(const LcsComplex& c, Theory t, int h, const Scalar& k) {
    using detail::blk;
    switch (t) {
        case Theory::deRham: return Subspace::column_space(blk(c.d(k), h - 1));
        case Theory::delta: return Subspace::column_space(blk(c.delta(k + 1), h + 1));
        case Theory::bottChern: return Subspace::column_space(blk(c.delta(k + 1), h + 1) * blk(c.d(k + 1), h));
        case Theory::aeppli:
            return sum(Subspace::column_space(blk(c.d(k), h - 1)), Subspace::column_space(blk(c.delta(k + 1), h + 1)));
    }
    throw Error("unknown theory");
}

inline CohomologyGroup cohomology(const LcsComplex& c, Theory t, int h, const Scalar& k) {
    CohomologyGroup g;
    g.theory = t;
    g.h = h;
    g.k = k;
    g.m = c.dimension();
    g.numerator = cohomology_numerator(c, t, h, k);
    g.denominator = cohomology_denominator(c, t, h, k);
    if (!g.numerator.contains(g.denominator))
        throw Error(theory_name(t) + " denominator not contained in numerator at h=" + std::to_string(h) + ", k=" + to_string(k));
    g.representatives = g.numerator.complement_of(g.denominator);
    return g;
}

/// Grid of cohomology groups over theories × degrees × weights.
class CohomologyTable {
public:
    using Key = std::tuple<Theory, int, Scalar>;

    std::string name;
    std::string triple_source;
    int dimension = 0;
    std::vector<Scalar> weights;
    std::vector<Theory> theories;

    void insert(CohomologyGroup g) {
        Key key{g.theory, g.h, g.k};
        cells_.insert_or_assign(std::move(key), std::move(g));
    }
    bool has(Theory t, int h, const Scalar& k) const { return cells_.count(Key{t, h, k}) != 0; }
    const CohomologyGroup& at(Theory t, int h, const Scalar& k) const {
        auto it = cells_.find(Key{t, h, k});
        if (it == cells_.end()) throw IndexOutOfRange("no cell " + theory_name(t) + " h=" + std::to_string(h) + " k=" + to_string(k));
        return it->second;
    }
    std::size_t dim(Theory t, int h, const Scalar& k) const { return at(t, h, k).dim(); }
    const std::map<Key, CohomologyGroup>& cells() const noexcept { return cells_; }

    /// Σ_h (−1)^h dim H^h_{d_k}.
    long euler(const Scalar& k) const {
        long e = 0;
        for (int h = 0; h <= dimension; ++h) e += (h % 2 ? -1 : 1) * static_cast<long>(dim(Theory::deRham, h, k));
        return e;
    }

private:
    std::map<Key, CohomologyGroup> cells_;
};

/// All cells for the given weights; throws EulerViolation if a de Rham row has nonzero Euler sum.
inline CohomologyTable full_table(const LcsComplex& c, const std::vector<Scalar>& weights,
                                  const std::vector<Theory>& theories = {all_theories.begin(), all_theories.end()},
                                  std::string name = {}) {
    CohomologyTable t;
    t.name = std::move(name);
    t.dimension = c.dimension();
    t.weights = weights;
    t.theories = theories;
    t.triple_source = c.structure().given_triple() ? c.structure().given_triple()->source : "synthesized";
    for (Theory th : theories)
        for (int h = 0; h <= c.dimension(); ++h)
            for (const auto& k : weights) t.insert(cohomology(c, th, h, k));
    if (std::find(theories.begin(), theories.end(), Theory::deRham) != theories.end())
        for (const auto& k : weights)
            if (long e = t.euler(k); e != 0) throw EulerViolation("Euler sum " + std::to_string(e) + " at k=" + to_string(k));
    return t;
}

inline std::vector<Scalar> integer_weights(int lo, int hi) {
    std::vector<Scalar> ks;
    for (int k = lo; k <= hi; ++k) ks.emplace_back(k);
    return ks;
}

/// Rank of the map induced by the identity (or by `map`) from source classes to target classes.
inline std::size_t induced_rank(const CohomologyGroup& source, const CohomologyGroup& target, const Matrix& map = Matrix()) {
    Subspace img = map.rows() == 0 ? source.representatives : source.representatives.image_under(map);
    Subspace num_img = map.rows() == 0 ? source.numerator : source.numerator.image_under(map);
    if (!target.numerator.contains(num_img)) throw Error("map does not send closed forms to closed forms");
    return sum(img, target.denominator).dim() - target.denominator.dim();
}

struct NaturalMapReport {
    int h = 0;
    Scalar k;
    std::size_t dim_bc = 0, dim_dr = 0, dim_delta = 0, dim_a = 0;
    std::size_t bc_to_dr = 0, bc_to_delta = 0, bc_to_a = 0, dr_to_a = 0, delta_to_a = 0;
};

inline NaturalMapReport natural_maps(const LcsComplex& c, int h, const Scalar& k) {
    auto bc = cohomology(c, Theory::bottChern, h, k);
    auto dr = cohomology(c, Theory::deRham, h, k);
    auto dl = cohomology(c, Theory::delta, h, k);
    auto ae = cohomology(c, Theory::aeppli, h, k);
    NaturalMapReport r;
    r.h = h;
    r.k = k;
    r.dim_bc = bc.dim();
    r.dim_dr = dr.dim();
    r.dim_delta = dl.dim();
    r.dim_a = ae.dim();
    r.bc_to_dr = induced_rank(bc, dr);
    r.bc_to_delta = induced_rank(bc, dl);
    r.bc_to_a = induced_rank(bc, ae);
    r.dr_to_a = induced_rank(dr, ae);
    r.delta_to_a = induced_rank(dl, ae);
    return r;
}

struct LemmaReport {
    Scalar k;
    std::vector<bool> injective;  // indexed by degree

    bool ok() const { return std::all_of(injective.begin(), injective.end(), [](bool b) { return b; }); }
};

/// Injectivity of H_{d_k+δ_k} → H_{δ_kd_k} in every degree.
inline LemmaReport satisfies_lemma(const LcsComplex& c, const Scalar& k) {
    LemmaReport r;
    r.k = k;
    for (int h = 0; h <= c.dimension(); ++h) {
        auto bc = cohomology(c, Theory::bottChern, h, k);
        auto ae = cohomology(c, Theory::aeppli, h, k);
        r.injective.push_back(induced_rank(bc, ae) == bc.dim());
    }
    return r;
}

/// Δ assembled from the six-term formulas with adjoints taken in the triple's metric.
inline GradedOperator laplacian(const LcsComplex& c, Theory t, const Scalar& k);

namespace detail {

inline GradedOperator assemble_laplacian(const LcsComplex& c, Theory t, const Scalar& k) {
    auto adj = [&](const GradedOperator& op) { return c.adjoint_of(op); };
    GradedOperator dk = c.d(k), dks = adj(dk);
    GradedOperator dl = c.delta(k), dls = adj(dl);
    GradedOperator dl1 = c.delta(k + 1), dl1s = adj(dl1);
    GradedOperator d1 = c.d(k + 1);
    auto sq = [&](const GradedOperator& x) { return x * adj(x); };   // x x*
    auto sqa = [&](const GradedOperator& x) { return adj(x) * x; };  // x* x
    switch (t) {
        case Theory::deRham: return dk * dks + dks * dk;
        case Theory::delta: return dls * dl + dl1 * dl1s;
        case Theory::bottChern: {
            GradedOperator dm1s = adj(c.d(k - 1));
            return dks * dk + dls * dl + sq(dl1 * d1) + sqa(dl * dk) + sq(dks * dl1) + sqa(dm1s * dl);
        }
        case Theory::aeppli: {
            GradedOperator d1s = adj(d1);
            return dk * dks + dl1 * dl1s + sqa(dl * dk) + sq(dl1 * d1) + sq(dl1 * d1s) + sq(dk * dls);
        }
    }
    throw Error("unknown theory");
}

}  // namespace detail

inline GradedOperator laplacian(const LcsComplex& c, Theory t, const Scalar& k) {
    return c.memo("laplacian:" + theory_name(t) + ":" + to_string(k), [&] { return detail::assemble_laplacian(c, t, k); });
}

inline Subspace harmonic_space(const LcsComplex& c, Theory t, int h, const Scalar& k) {
    return Subspace::kernel_of(laplacian(c, t, k).block(h));
}

struct LaplacianKernels {
    std::size_t d = 0, delta = 0, bc = 0, a = 0;

    std::size_t operator[](Theory t) const {
        switch (t) {
            case Theory::deRham: return d;
            case Theory::delta: return delta;
            case Theory::bottChern: return bc;
            case Theory::aeppli: return a;
        }
        return 0;
    }
};

inline LaplacianKernels laplacian_kernels(const LcsComplex& c, int h, const Scalar& k) {
    return {harmonic_space(c, Theory::deRham, h, k).dim(), harmonic_space(c, Theory::delta, h, k).dim(),
            harmonic_space(c, Theory::bottChern, h, k).dim(), harmonic_space(c, Theory::aeppli, h, k).dim()};
}

struct IsoCheck {
    std::string name;
    int h = 0;
    Scalar k;
    std::size_t source_dim = 0, target_dim = 0;
    bool ok = false;
    std::string detail;
};

struct DualityReport {
    std::vector<IsoCheck> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const IsoCheck& c) { return c.ok; });
    }
};

namespace detail {

inline void require_unimodular(const LcsComplex& c) {
    if (!is_unimodular(c.structure().algebra())) throw NotUnimodular("trace(ad) ≠ 0: no invariant volume pairing");
}

/// Chain-level map between quotients: num→num, den→den, bijective on classes.
inline IsoCheck chain_iso(std::string name, int h, const Scalar& k, const CohomologyGroup& src, const CohomologyGroup& tgt,
                          const Matrix& map) {
    IsoCheck r{std::move(name), h, k, src.dim(), tgt.dim(), false, {}};
    if (!tgt.numerator.contains(src.numerator.image_under(map))) {
        r.detail = "closed forms not mapped to closed forms";
        return r;
    }
    if (!tgt.denominator.contains(src.denominator.image_under(map))) {
        r.detail = "exact forms not mapped to exact forms";
        return r;
    }
    std::size_t rank = sum(src.representatives.image_under(map), tgt.denominator).dim() - tgt.denominator.dim();
    r.ok = rank == src.dim() && rank == tgt.dim();
    if (!r.ok) r.detail = "induced map has rank " + std::to_string(rank);
    return r;
}

/// harm represents the classes of g: inside the numerator, transverse to the denominator, of full size.
inline bool represents(const Subspace& harm, const CohomologyGroup& g) {
    return g.numerator.contains(harm) && intersection(harm, g.denominator).dim() == 0 && harm.dim() == g.dim();
}

/// Hodge-star duality checked on harmonic spaces.
inline IsoCheck harmonic_iso(std::string name, int h, const Scalar& k, const LcsComplex& c, Theory ts, int hs,
                             const Scalar& ks, Theory tt, int ht, const Scalar& kt, const StarOperator& star) {
    auto src = cohomology(c, ts, hs, ks);
    auto tgt = cohomology(c, tt, ht, kt);
    IsoCheck r{std::move(name), h, k, src.dim(), tgt.dim(), false, {}};
    Subspace hsrc = harmonic_space(c, ts, hs, ks), htgt = harmonic_space(c, tt, ht, kt);
    if (!represents(hsrc, src) || !represents(htgt, tgt)) {
        r.detail = "harmonic space does not represent cohomology";
        return r;
    }
    r.ok = hsrc.image_under(star.block(hs)) == htgt;
    if (!r.ok) r.detail = "star does not map harmonic forms onto harmonic forms";
    return r;
}

inline std::string weight_label(const std::string& op, const Scalar& k) { return op + "_{" + to_string(k) + "}"; }

}  // namespace detail

/// ⋆: H^{n−h}_{d_k} → H^{n+h}_{δ_{h+k}}.
inline DualityReport poincare_symplectic(const LcsComplex& c, int h, const Scalar& k) {
    detail::require_unimodular(c);
    int n = c.half_dimension();
    auto star = symplectic_star_operator(c.structure().omega());
    auto src = cohomology(c, Theory::deRham, n - h, k);
    auto tgt = cohomology(c, Theory::delta, n + h, k + h);
    return {{detail::chain_iso("star: H_" + detail::weight_label("d", k) + " -> H_" + detail::weight_label("delta", k + h), h, k,
                               src, tgt, star.block(n - h))}};
}

/// ∗: H^{n−h}_{d_k} → H^{n+h}_{d_{−k}} and ∗: H^{n−h}_{δ_{−k−h}} → H^{n+h}_{δ_{k+h}}.
inline DualityReport poincare_hodge(const LcsComplex& c, int h, const Scalar& k) {
    detail::require_unimodular(c);
    int n = c.half_dimension();
    auto star = hodge_star_operator(c.triple().g, c.structure().orientation());
    DualityReport r;
    r.checks.push_back(detail::harmonic_iso("hodge: H_" + detail::weight_label("d", k) + " -> H_" + detail::weight_label("d", -k), h,
                                            k, c, Theory::deRham, n - h, k, Theory::deRham, n + h, -k, star));
    Scalar ks = -k - h, kt = k + h;
    r.checks.push_back(detail::harmonic_iso("hodge: H_" + detail::weight_label("delta", ks) + " -> H_" + detail::weight_label("delta", kt),
                                            h, k, c, Theory::delta, n - h, ks, Theory::delta, n + h, kt, star));
    return r;
}

/// ∗: H^{n−h}_{d_k+δ_k} → H^{n+h}_{δ_{−k}d_{−k}}.
inline DualityReport duality_bc_aeppli(const LcsComplex& c, int h, const Scalar& k) {
    detail::require_unimodular(c);
    int n = c.half_dimension();
    auto star = hodge_star_operator(c.triple().g, c.structure().orientation());
    return {{detail::harmonic_iso("hodge: BC_" + to_string(k) + " -> A_" + to_string(-k), h, k, c, Theory::bottChern, n - h, k,
                                  Theory::aeppli, n + h, -k, star)}};
}

/// L^h: H^{n−h}_{BC,k} → H^{n+h}_{BC,k+h}, and the same for Aeppli.
inline DualityReport hlc_bc_aeppli(const LcsComplex& c, int h, const Scalar& k) {
    int n = c.half_dimension();
    Matrix lh = power(c.L(), h).block(n - h);
    DualityReport r;
    for (Theory t : {Theory::bottChern, Theory::aeppli}) {
        auto src = cohomology(c, t, n - h, k);
        auto tgt = cohomology(c, t, n + h, k + h);
        r.checks.push_back(detail::chain_iso("L^" + std::to_string(h) + ": " + theory_name(t) + "_" + to_string(k) + " -> " +
                                                 theory_name(t) + "_" + to_string(k + h),
                                             h, k, src, tgt, lh));
    }
    return r;
}

struct HlcWitness {
    int h = 0;
    Scalar k;
    std::size_t source_dim = 0, target_dim = 0;
};

struct LcsHlcReport {
    std::vector<IsoCheck> cells;
    std::optional<HlcWitness> witness;

    bool ok() const {
        return std::all_of(cells.begin(), cells.end(), [](const IsoCheck& c) { return c.ok; });
    }
};

/// L^h: H^{n−h}_{d_k} → H^{n+h}_{d_{k+h}} for h = 0..n and the given weights.
inline LcsHlcReport lcs_hlc_check(const LcsComplex& c, const std::vector<Scalar>& weights) {
    int n = c.half_dimension();
    LcsHlcReport r;
    for (int h = 0; h <= n; ++h) {
        Matrix lh = power(c.L(), h).block(n - h);
        for (const auto& k : weights) {
            auto src = cohomology(c, Theory::deRham, n - h, k);
            auto tgt = cohomology(c, Theory::deRham, n + h, k + h);
            r.cells.push_back(detail::chain_iso("L^" + std::to_string(h) + ": d_" + to_string(k) + " -> d_" + to_string(k + h), h, k,
                                                src, tgt, lh));
        }
    }
    if (!c.structure().theta().is_zero()) {
        HlcWitness w{n, Scalar(-n), cohomology(c, Theory::deRham, 0, -n).dim(), cohomology(c, Theory::deRham, 2 * n, 0).dim()};
        if (w.source_dim != w.target_dim) r.witness = w;
    }
    return r;
}

/// Whether the d_k-closed α has a δ_k-closed representative α + d_kβ.
inline bool has_delta_closed_representative(const LcsComplex& c, const Form& alpha, const Scalar& k) {
    int h = alpha.degree();
    GradedOperator dk = c.d(k), dl = c.delta(k);
    if (!dk.apply(alpha).is_zero()) throw ClassNotClosed("d_k α ≠ 0");
    Vector rhs = detail::blk(dl, h) * alpha.to_vector();
    if (is_zero(rhs)) return true;
    return Subspace::column_space(detail::blk(dl, h) * detail::blk(dk, h - 1)).contains(rhs);
}

struct ImageEqualities {
    bool first = false;   // im δ_{k+1} ∩ ker d_k = im d_k ∩ im δ_{k+1}
    bool second = false;  // im d_k ∩ ker δ_k = im d_k ∩ im δ_{k+1}
};

inline ImageEqualities verify_image_equalities(const LcsComplex& c, int h, const Scalar& k) {
    using detail::blk;
    GradedOperator dk = c.d(k), dl = c.delta(k), dl1 = c.delta(k + 1);
    Subspace im_d = Subspace::column_space(blk(dk, h - 1));
    Subspace im_dl1 = Subspace::column_space(blk(dl1, h + 1));
    Subspace ker_d = Subspace::kernel_of(blk(dk, h));
    Subspace ker_dl = Subspace::kernel_of(blk(dl, h));
    Subspace both = intersection(im_d, im_dl1);
    return {intersection(im_dl1, ker_d) == both, intersection(im_d, ker_dl) == both};
}

/// Matrix with entries in ℚ[k].
using PolyMatrix = std::vector<std::vector<RatPoly>>;

namespace detail {

inline PolyMatrix poly_matrix(const Matrix& constant, const Matrix& linear) {
    PolyMatrix p(constant.rows(), std::vector<RatPoly>(constant.cols()));
    for (std::size_t i = 0; i < constant.rows(); ++i)
        for (std::size_t j = 0; j < constant.cols(); ++j) p[i][j] = RatPoly({constant(i, j), linear(i, j)});
    return p;
}

/// Block of pencil at weight k + offset, as a matrix over ℚ[k].
inline PolyMatrix pencil_block(const OperatorPencil& p, int h, const Scalar& offset) {
    return poly_matrix(blk(p.at(offset), h), blk(p.linear_part(), h));
}

inline PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, std::size_t inner) {
    std::size_t r = a.size(), c = b.empty() ? 0 : b[0].size();
    PolyMatrix out(r, std::vector<RatPoly>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t t = 0; t < inner; ++t) out[i][j] += a[i][t] * b[t][j];
    return out;
}

inline PolyMatrix vstack(PolyMatrix a, const PolyMatrix& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline PolyMatrix hstack(PolyMatrix a, const PolyMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i].insert(a[i].end(), b[i].begin(), b[i].end());
    return a;
}

}  // namespace detail

/// Product of the invariant factors (the gcd of maximal nonvanishing minors), monic.
/// Its roots are exactly the k where the rank falls below the generic rank.
inline RatPoly rank_drop_polynomial(PolyMatrix a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    RatPoly prod(Scalar(1));
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        auto pick = [&](std::size_t r0, std::size_t c0) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = r0; i < rows; ++i)
                for (std::size_t j = c0; j < cols; ++j)
                    if (!a[i][j].is_zero() && (!best || a[i][j].degree() < a[best->first][best->second].degree())) best = {i, j};
            return best;
        };
        auto p = pick(t, t);
        if (!p) break;
        std::swap(a[t], a[p->first]);
        for (auto& row : a) std::swap(row[t], row[p->second]);
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero()) continue;
                RatPoly q = divmod(a[i][t], a[t][t]).first;
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (!a[i][t].is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                RatPoly q = divmod(a[t][j], a[t][t]).first;
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (!a[t][j].is_zero()) clean = false;
            }
            if (clean) break;
            // a remainder of lower degree becomes the new pivot
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (!a[i][t].is_zero() && a[i][t].degree() < a[bi][bj].degree()) bi = i, bj = t;
            for (std::size_t j = t + 1; j < cols; ++j)
                if (!a[t][j].is_zero() && a[t][j].degree() < a[bi][bj].degree()) bi = t, bj = j;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
        }
        prod = prod * a[t][t].monic();
    }
    return prod;
}

struct CriticalWeights {
    std::set<Scalar> roots;
    std::vector<std::string> unresolved;  // leftover factors in k with no rational root
};

/// Rational weights where some cohomology of the given theories can change dimension.
inline CriticalWeights critical_weights(const LcsComplex& c, const std::vector<Theory>& theories = {all_theories.begin(),
                                                                                                   all_theories.end()}) {
    using detail::pencil_block;
    const auto& D = c.d_pencil();
    const auto& De = c.delta_pencil();
    int m = c.dimension();
    std::vector<PolyMatrix> mats;
    for (int h = 0; h <= m; ++h) {
        for (Theory t : theories) switch (t) {
                case Theory::deRham: mats.push_back(pencil_block(D, h, 0)); break;
                case Theory::delta:
                    mats.push_back(pencil_block(De, h, 0));
                    mats.push_back(pencil_block(De, h, 1));
                    break;
                case Theory::bottChern:
                    mats.push_back(detail::vstack(pencil_block(D, h, 0), pencil_block(De, h, 0)));
                    mats.push_back(detail::multiply(pencil_block(De, h + 1, 1), pencil_block(D, h, 1), detail::space_dim(m, h + 1)));
                    break;
                case Theory::aeppli:
                    mats.push_back(detail::multiply(pencil_block(De, h + 1, 0), pencil_block(D, h, 0), detail::space_dim(m, h + 1)));
                    mats.push_back(detail::hstack(pencil_block(D, h - 1, 0), pencil_block(De, h + 1, 1)));
                    break;
            }
    }
    CriticalWeights out;
    std::set<std::string> seen;
    for (auto& mat : mats) {
        auto f = rational_root_factorization(rank_drop_polynomial(std::move(mat)));
        out.roots.insert(f.roots.begin(), f.roots.end());
        if (f.rest.degree() > 0 && seen.insert(f.rest.to_string("k")).second) out.unresolved.push_back(f.rest.to_string("k"));
    }
    return out;
}

}  // namespace lcsc
