#pragma once

#include "lcsc/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace lcsc {

inline constexpr int kMaxDimension = 16;

inline std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

/// A subset of {1..m}, bit i-1 set for index i. Degree is the cardinality.
class MultiIndex {
public:
    constexpr MultiIndex() = default;
    constexpr explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}

    /// From a strictly increasing list of 1-based indices.
    static MultiIndex from_sorted(const std::vector<int>& idx) {
        std::uint32_t mask = 0;
        int prev = 0;
        for (int i : idx) {
            if (i <= prev) throw IndexOutOfRange("multi-index not strictly increasing");
            if (i > kMaxDimension) throw IndexOutOfRange("index " + std::to_string(i));
            mask |= 1u << (i - 1);
            prev = i;
        }
        return MultiIndex(mask);
    }

    constexpr std::uint32_t mask() const noexcept { return mask_; }
    int degree() const noexcept { return std::popcount(mask_); }
    bool contains(int i) const noexcept { return (mask_ >> (i - 1)) & 1u; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 1; i <= kMaxDimension; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    /// "134" for m <= 9, "1,3,10" otherwise; "1" for the empty index is not used here.
    std::string to_string(int m) const {
        std::string s;
        for (int i : indices()) {
            if (m > 9 && !s.empty()) s += ',';
            s += std::to_string(i);
        }
        return s;
    }

    friend constexpr bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
    /// By degree, then lexicographically by index list.
    friend bool operator<(MultiIndex a, MultiIndex b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        std::uint32_t diff = a.mask_ ^ b.mask_;
        return diff != 0 && (a.mask_ & diff & (~diff + 1)) != 0;
    }

private:
    std::uint32_t mask_ = 0;
};

/// Sorts `indices` into a MultiIndex; sign is the parity of the sort, 0 on a repeat.
inline std::pair<MultiIndex, int> canonical_sign(const std::vector<int>& indices, int m) {
    for (int i : indices)
        if (i < 1 || i > m) throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(m));
    std::vector<int> v = indices;
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return {MultiIndex(), 0};
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return {MultiIndex::from_sorted(v), sign};
}

/// Sign of e^I ∧ e^J for disjoint I, J (0 when they overlap).
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inversions = 0;
    for (std::uint32_t rest = b; rest; rest &= rest - 1) {
        std::uint32_t bit = rest & (~rest + 1);
        inversions += std::popcount(a & ~((bit << 1) - 1));  // elements of a above this element of b
    }
    return (inversions & 1) ? -1 : 1;
}

/// Ordered monomial basis of each ∧^h for a fixed ambient dimension m.
/// Monomials within a degree are in lexicographic order of their index lists.
class ExteriorBasis {
public:
    explicit ExteriorBasis(int m) : m_(m), by_degree_(static_cast<std::size_t>(m) + 1), position_(std::size_t{1} << m) {
        if (m < 0 || m > kMaxDimension) throw IndexOutOfRange("dimension " + std::to_string(m));
        std::vector<int> current;
        for (int h = 0; h <= m; ++h) {
            current.clear();
            enumerate(1, h, current);
        }
    }

    int dimension() const noexcept { return m_; }
    std::size_t size(int h) const { return (h < 0 || h > m_) ? 0 : by_degree_[static_cast<std::size_t>(h)].size(); }
    MultiIndex at(int h, std::size_t pos) const { return by_degree_[static_cast<std::size_t>(h)][pos]; }
    const std::vector<MultiIndex>& degree(int h) const { return by_degree_[static_cast<std::size_t>(h)]; }
    std::size_t position(MultiIndex I) const { return position_[I.mask()]; }

private:
    void enumerate(int from, int remaining, std::vector<int>& current) {
        if (remaining == 0) {
            auto I = MultiIndex::from_sorted(current);
            auto& slot = by_degree_[current.size()];
            position_[I.mask()] = slot.size();
            slot.push_back(I);
            return;
        }
        for (int i = from; i <= m_ - remaining + 1; ++i) {
            current.push_back(i);
            enumerate(i + 1, remaining - 1, current);
            current.pop_back();
        }
    }

    int m_;
    std::vector<std::vector<MultiIndex>> by_degree_;
    std::vector<std::size_t> position_;
};

/// Shared immutable basis for dimension m.
inline const ExteriorBasis& exterior_basis(int m) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ExteriorBasis>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<ExteriorBasis>(m);
    return *slot;
}

/// Homogeneous exterior form of degree h on an m-dimensional space.
class Form {
public:
    Form() = default;
    Form(int m, int degree) : m_(m), degree_(degree) {
        if (m < 0 || m > kMaxDimension) throw IndexOutOfRange("dimension " + std::to_string(m));
        if (degree < 0) throw IndexOutOfRange("negative degree");
    }

    static Form constant(int m, const Scalar& c) {
        Form f(m, 0);
        f.add(MultiIndex(), c);
        return f;
    }

    /// e^{i1} ∧ ... ∧ e^{ih} times c, indices in any order (sign applied).
    static Form monomial(int m, const std::vector<int>& indices, const Scalar& c = 1) {
        Form f(m, static_cast<int>(indices.size()));
        auto [I, s] = canonical_sign(indices, m);
        if (s != 0) f.add(I, c * s);
        return f;
    }

    static Form from_vector(int m, int degree, const Vector& v) {
        Form f(m, degree);
        const auto& B = exterior_basis(m);
        if (v.size() != B.size(degree)) throw DimensionMismatch("coefficient vector length");
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i]) != 0) f.coeffs_[B.at(degree, i)] = v[i];
        return f;
    }

    int dimension() const noexcept { return m_; }
    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::map<MultiIndex, Scalar>& terms() const noexcept { return coeffs_; }

    Scalar coefficient(MultiIndex I) const {
        auto it = coeffs_.find(I);
        return it == coeffs_.end() ? Scalar(0) : it->second;
    }

    void add(MultiIndex I, const Scalar& c) {
        if (I.degree() != degree_) throw DimensionMismatch("monomial degree differs from form degree");
        if (sgn(c) == 0) return;
        auto& slot = coeffs_[I];
        slot += c;
        if (sgn(slot) == 0) coeffs_.erase(I);
    }

    Vector to_vector() const {
        const auto& B = exterior_basis(m_);
        Vector v(B.size(degree_));
        for (const auto& [I, c] : coeffs_) v[B.position(I)] = c;
        return v;
    }

    Form& operator+=(const Form& o) {
        check_compatible(o);
        for (const auto& [I, c] : o.coeffs_) add(I, c);
        return *this;
    }
    Form& operator-=(const Form& o) {
        check_compatible(o);
        for (const auto& [I, c] : o.coeffs_) add(I, -c);
        return *this;
    }
    Form& operator*=(const Scalar& c) {
        if (sgn(c) == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [I, x] : coeffs_) x *= c;
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(Form a) { return a *= Scalar(-1); }
    friend Form operator*(const Scalar& c, Form a) { return a *= c; }
    friend Form operator*(Form a, const Scalar& c) { return a *= c; }
    friend bool operator==(const Form& a, const Form& b) {
        return a.m_ == b.m_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    /// "e12+e34", "-1/2*e135", "1", "0".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [I, c] : coeffs_) {
            std::string mono = I.degree() == 0 ? "" : "e" + I.to_string(m_);
            Scalar a = abs(c);
            s += sgn(c) < 0 ? "-" : (s.empty() ? "" : "+");
            if (mono.empty()) s += a.get_str();
            else if (a == 1) s += mono;
            else s += a.get_str() + "*" + mono;
        }
        return s;
    }

private:
    void check_compatible(const Form& o) const {
        if (o.m_ != m_ || o.degree_ != degree_) throw DimensionMismatch("forms of different dimension or degree");
    }

    int m_ = 0;
    int degree_ = 0;
    std::map<MultiIndex, Scalar> coeffs_;
};

/// Parses "e12+e34", "-e1", "1/2*e135", "3", "e1-2*e2". Indices are single digits
/// for m <= 9; "e{1,10}" is accepted for any m.
inline Form parse_form(const std::string& text, int m, int degree = -1) {
    std::vector<std::pair<std::vector<int>, Scalar>> terms;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip();
    if (i == text.size()) throw ParseError("empty form", 0);
    while (i < text.size()) {
        skip();
        int sgn_ = 1;
        if (text[i] == '+' || text[i] == '-') {
            sgn_ = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!terms.empty()) {
            throw ParseError("expected '+' or '-'", i);
        }
        Scalar coef = 1;
        bool have_coef = false;
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        if (i > start) {
            coef = parse_scalar(text.substr(start, i - start));
            have_coef = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            } else {
                terms.push_back({{}, coef * sgn_});
                continue;
            }
        }
        if (i >= text.size() || text[i] != 'e') throw ParseError(have_coef ? "expected monomial after '*'" : "expected monomial", i);
        ++i;
        std::vector<int> idx;
        if (i < text.size() && text[i] == '{') {
            ++i;
            while (true) {
                std::size_t s = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (s == i) throw ParseError("expected index", i);
                idx.push_back(std::stoi(text.substr(s, i - s)));
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == '}') {
                    ++i;
                    break;
                }
                throw ParseError("expected ',' or '}'", i);
            }
        } else {
            std::size_t s = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) idx.push_back(text[i++] - '0');
            if (s == i) throw ParseError("expected index digits", i);
        }
        terms.push_back({idx, coef * sgn_});
        skip();
    }
    int deg = degree >= 0 ? degree : static_cast<int>(terms.front().first.size());
    Form f(m, deg);
    for (auto& [idx, c] : terms) {
        if (static_cast<int>(idx.size()) != deg) throw ParseError("inhomogeneous form", 0);
        auto [I, s] = canonical_sign(idx, m);
        if (s != 0) f.add(I, c * s);
    }
    return f;
}

inline Form wedge(const Form& a, const Form& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch("wedge of forms in different dimensions");
    int m = a.dimension();
    int deg = a.degree() + b.degree();
    if (deg > m) return Form(m, deg);
    Form out(m, deg);
    for (const auto& [I, x] : a.terms())
        for (const auto& [J, y] : b.terms()) {
            int s = wedge_sign(I.mask(), J.mask());
            if (s != 0) out.add(MultiIndex(I.mask() | J.mask()), x * y * s);
        }
    return out;
}

/// Bivector Σ_{i<j} P^{ij} e_i ∧ e_j, stored as the skew matrix P (0-based).
class Bivector {
public:
    Bivector() = default;
    explicit Bivector(Matrix skew) : p_(std::move(skew)) {
        if (p_.rows() != p_.cols() || !(p_.transpose() == -p_)) throw DimensionMismatch("bivector matrix must be skew-symmetric");
    }
    int dimension() const noexcept { return static_cast<int>(p_.rows()); }
    const Matrix& matrix() const noexcept { return p_; }
    const Scalar& operator()(int i, int j) const { return p_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); }

private:
    Matrix p_;
};

/// ι_{e_i} on a monomial: (ι_{e_i} e^I)(…) = e^I(e_i, …).
inline std::pair<MultiIndex, int> contract_vector(int i, MultiIndex I) {
    if (!I.contains(i)) return {MultiIndex(), 0};
    std::uint32_t below = I.mask() & ((1u << (i - 1)) - 1);
    int s = (std::popcount(below) & 1) ? -1 : 1;
    return {MultiIndex(I.mask() & ~(1u << (i - 1))), s};
}

/// ι_v a with ι_{X∧Y} = ι_Y ∘ ι_X, i.e. (ι_{X∧Y} a)(…) = a(X, Y, …).
inline Form interior_product(const Bivector& v, const Form& a) {
    int m = a.dimension();
    if (v.dimension() != m) throw DimensionMismatch("bivector and form dimensions differ");
    if (a.degree() < 2) return Form(m, 0);
    Form out(m, a.degree() - 2);
    for (const auto& [I, c] : a.terms())
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const Scalar& p = v(i, j);
                if (sgn(p) == 0) continue;
                auto [K1, s1] = contract_vector(i, I);
                if (s1 == 0) continue;
                auto [K2, s2] = contract_vector(j, K1);
                if (s2 == 0) continue;
                out.add(K2, c * p * (s1 * s2));
            }
    return out;
}

/// Skew matrix ω_{ij} = Ω(e_i, e_j) of a 2-form (0-based).
inline Matrix two_form_matrix(const Form& omega) {
    if (omega.degree() != 2) throw DimensionMismatch("expected a 2-form");
    auto m = static_cast<std::size_t>(omega.dimension());
    Matrix w(m, m);
    for (const auto& [I, c] : omega.terms()) {
        auto idx = I.indices();
        auto i = static_cast<std::size_t>(idx[0] - 1), j = static_cast<std::size_t>(idx[1] - 1);
        w(i, j) = c;
        w(j, i) = -c;
    }
    return w;
}

inline Form two_form_from_matrix(const Matrix& w) {
    int m = static_cast<int>(w.rows());
    Form f(m, 2);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) f.add(MultiIndex((1u << (i - 1)) | (1u << (j - 1))), w(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
    return f;
}

/// A family of per-degree matrices ∧^h → ∧^{h+shift}, h = 0..m.
class GradedOperator {
public:
    GradedOperator() = default;
    GradedOperator(int m, int shift) : m_(m), shift_(shift) {
        const auto& B = exterior_basis(m);
        for (int h = 0; h <= m; ++h) blocks_.emplace_back(B.size(h + shift), B.size(h));
    }

    static GradedOperator identity(int m) {
        GradedOperator op(m, 0);
        for (int h = 0; h <= m; ++h) op.blocks_[static_cast<std::size_t>(h)] = Matrix::identity(exterior_basis(m).size(h));
        return op;
    }

    /// Builds the operator from its action on single monomials.
    template <typename MonomialMap>
    static GradedOperator from_monomials(int m, int shift, MonomialMap&& f) {
        GradedOperator op(m, shift);
        const auto& B = exterior_basis(m);
        for (int h = 0; h <= m; ++h) {
            if (B.size(h + shift) == 0) continue;
            auto& M = op.blocks_[static_cast<std::size_t>(h)];
            for (std::size_t c = 0; c < B.size(h); ++c) {
                Form img = f(Form::monomial(m, B.at(h, c).indices()));
                for (const auto& [I, x] : img.terms()) M(B.position(I), c) = x;
            }
        }
        return op;
    }

    /// Extension of a linear map T on 1-forms to all degrees (T acts on coefficient columns).
    static GradedOperator exterior_power(const Matrix& t) {
        int m = static_cast<int>(t.rows());
        GradedOperator op(m, 0);
        const auto& B = exterior_basis(m);
        for (int h = 0; h <= m; ++h) {
            auto& M = op.blocks_[static_cast<std::size_t>(h)];
            for (std::size_t r = 0; r < B.size(h); ++r)
                for (std::size_t c = 0; c < B.size(h); ++c) {
                    std::vector<std::size_t> rs, cs;
                    for (int i : B.at(h, r).indices()) rs.push_back(static_cast<std::size_t>(i - 1));
                    for (int j : B.at(h, c).indices()) cs.push_back(static_cast<std::size_t>(j - 1));
                    M(r, c) = h == 0 ? Scalar(1) : t.select(rs, cs).determinant();
                }
        }
        return op;
    }

    /// From explicit per-degree blocks (blocks[h] maps ∧^h to ∧^{h+shift}).
    static GradedOperator from_blocks(int m, int shift, std::vector<Matrix> blocks) {
        GradedOperator op(m, shift);
        if (blocks.size() != op.blocks_.size()) throw DimensionMismatch("wrong number of blocks");
        for (std::size_t h = 0; h < blocks.size(); ++h) {
            const auto& want = op.blocks_[h];
            if (blocks[h].rows() != want.rows() || blocks[h].cols() != want.cols())
                throw DimensionMismatch("block shape in degree " + std::to_string(h));
        }
        op.blocks_ = std::move(blocks);
        return op;
    }

    int dimension() const noexcept { return m_; }
    int shift() const noexcept { return shift_; }

    /// Matrix from degree h (empty 0×0-style matrix when h is out of range).
    const Matrix& block(int h) const {
        static const Matrix empty;
        if (h < 0 || h > m_) return empty;
        return blocks_[static_cast<std::size_t>(h)];
    }
    Matrix& block(int h) { return blocks_.at(static_cast<std::size_t>(h)); }

    /// Block from degree h, or a correctly shaped zero map if h is out of range.
    Matrix block_or_zero(int h) const {
        const auto& B = exterior_basis(m_);
        if (h < 0 || h > m_) return Matrix(B.size(h + shift_), B.size(h));
        return blocks_[static_cast<std::size_t>(h)];
    }

    Form apply(const Form& a) const {
        if (a.dimension() != m_) throw DimensionMismatch("operator and form dimensions differ");
        int target = a.degree() + shift_;
        if (target < 0 || target > m_) return Form(m_, std::max(target, 0));
        return Form::from_vector(m_, target, block(a.degree()) * a.to_vector());
    }

    bool is_zero() const {
        return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return b.is_zero(); });
    }

    GradedOperator& operator+=(const GradedOperator& o) {
        check_same(o);
        for (std::size_t h = 0; h < blocks_.size(); ++h) blocks_[h] += o.blocks_[h];
        return *this;
    }
    GradedOperator& operator-=(const GradedOperator& o) {
        check_same(o);
        for (std::size_t h = 0; h < blocks_.size(); ++h) blocks_[h] -= o.blocks_[h];
        return *this;
    }
    GradedOperator& operator*=(const Scalar& c) {
        for (auto& b : blocks_) b *= c;
        return *this;
    }
    friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
    friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
    friend GradedOperator operator-(GradedOperator a) { return a *= Scalar(-1); }
    friend GradedOperator operator*(const Scalar& c, GradedOperator a) { return a *= c; }

    /// Composition (a ∘ b): apply b first.
    friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
        if (a.m_ != b.m_) throw DimensionMismatch("composition across dimensions");
        GradedOperator out(a.m_, a.shift_ + b.shift_);
        for (int h = 0; h <= a.m_; ++h) {
            int mid = h + b.shift_;
            if (mid < 0 || mid > a.m_) continue;
            out.blocks_[static_cast<std::size_t>(h)] = a.block(mid) * b.block(h);
        }
        return out;
    }

    friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
        return a.m_ == b.m_ && a.shift_ == b.shift_ && a.blocks_ == b.blocks_;
    }

    /// Degrees where this operator differs from `o`.
    std::vector<int> differing_degrees(const GradedOperator& o) const {
        check_same(o);
        std::vector<int> out;
        for (int h = 0; h <= m_; ++h)
            if (!(blocks_[static_cast<std::size_t>(h)] == o.blocks_[static_cast<std::size_t>(h)])) out.push_back(h);
        return out;
    }

private:
    void check_same(const GradedOperator& o) const {
        if (o.m_ != m_ || o.shift_ != shift_) throw DimensionMismatch("graded operators of different shape");
    }

    int m_ = 0;
    int shift_ = 0;
    std::vector<Matrix> blocks_;
};

inline GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) { return a * b - b * a; }

/// The operator a ↦ w ∧ a.
inline GradedOperator wedge_operator(const Form& w) {
    return GradedOperator::from_monomials(w.dimension(), w.degree(), [&](const Form& e) { return wedge(w, e); });
}

/// The operator a ↦ ι_v a.
inline GradedOperator interior_operator(const Bivector& v) {
    return GradedOperator::from_monomials(v.dimension(), -2, [&](const Form& e) { return interior_product(v, e); });
}

}  // namespace lcsc
