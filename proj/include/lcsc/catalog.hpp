#pragma once

#include "lcsc/cohomology.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcsc {

LCSC_DEFINE_ERROR(UnknownEntry);
LCSC_DEFINE_ERROR(InvalidParameters);

struct GoldenCell {
    Theory theory = Theory::deRham;
    int h = 0;
    Scalar k;
    std::size_t dim = 0;
    std::optional<std::vector<Form>> span;  // absent when only the dimension is known
};

/// Reference grid; cells not listed are zero.
struct GoldenTable {
    std::string name;
    int dimension = 0;
    std::vector<Scalar> weights;
    std::vector<Theory> theories;
    std::vector<GoldenCell> cells;

    std::size_t dim(Theory t, int h, const Scalar& k) const {
        for (const auto& c : cells)
            if (c.theory == t && c.h == h && c.k == k) return c.dim;
        return 0;
    }
    const GoldenCell* find(Theory t, int h, const Scalar& k) const {
        for (const auto& c : cells)
            if (c.theory == t && c.h == h && c.k == k) return &c;
        return nullptr;
    }
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::string structure_equations;  // Salamon notation
    LcsStructure structure;
    std::map<std::string, Scalar> parameters;
    std::optional<GoldenTable> golden;
};

namespace detail {

struct SpanRow {
    Theory t;
    int h;
    int k;
    std::vector<const char*> span;
};

inline GoldenTable golden_from_spans(std::string name, int m, const std::vector<SpanRow>& rows) {
    GoldenTable g{std::move(name), m, integer_weights(-2, 2), {all_theories.begin(), all_theories.end()}, {}};
    for (const auto& r : rows) {
        std::vector<Form> forms;
        for (const char* s : r.span) forms.push_back(s == std::string("1") ? Form::constant(m, 1) : parse_form(s, m));
        g.cells.push_back({r.t, r.h, Scalar(r.k), forms.size(), forms});
    }
    return g;
}

inline GoldenTable rh3_golden() {
    using T = Theory;
    const T d = T::deRham, dl = T::delta, bc = T::bottChern, a = T::aeppli;
    return golden_from_spans(
        "rh3", 4,
        {{d, 0, 0, {"1"}},
         {dl, 0, -2, {"1"}},
         {bc, 0, 0, {"1"}},
         {a, 0, -2, {"1"}},
         {d, 1, 0, {"e1", "e2", "e4"}},
         {dl, 1, -1, {"e1", "e2", "e3"}},
         {bc, 1, -2, {"e4"}},
         {bc, 1, 0, {"e1", "e2", "e4"}},
         {a, 1, -1, {"e1", "e2", "e3"}},
         {a, 1, 1, {"e3"}},
         {d, 2, 0, {"e13", "e14", "e23", "e24"}},
         {dl, 2, 0, {"e13", "e14", "e23", "e24"}},
         {bc, 2, -1, {"e14", "e24", "e12-e34"}},
         {bc, 2, 0, {"e13", "e14", "e23", "e24"}},
         {bc, 2, 1, {"e12+e34"}},
         {a, 2, -1, {"e12+e34"}},
         {a, 2, 0, {"e13", "e14", "e23", "e24"}},
         {a, 2, 1, {"e13", "e23", "e12-e34"}},
         {d, 3, 0, {"e123", "e134", "e234"}},
         {dl, 3, 1, {"e124", "e134", "e234"}},
         {bc, 3, -1, {"e124"}},
         {bc, 3, 1, {"e124", "e134", "e234"}},
         {a, 3, 0, {"e123", "e134", "e234"}},
         {a, 3, 2, {"e123"}},
         {d, 4, 0, {"e1234"}},
         {dl, 4, 2, {"e1234"}},
         {bc, 4, 2, {"e1234"}},
         {a, 4, 0, {"e1234"}}});
}

inline GoldenTable d4_golden() {
    using T = Theory;
    const T d = T::deRham, dl = T::delta, bc = T::bottChern, a = T::aeppli;
    return golden_from_spans(
        "d4", 4,
        {{d, 0, 0, {"1"}},
         {dl, 0, -2, {"1"}},
         {bc, 0, 0, {"1"}},
         {a, 0, -2, {"1"}},
         {d, 1, -1, {"e2"}},
         {d, 1, 0, {"e4"}},
         {d, 1, 1, {"e1"}},
         {dl, 1, -2, {"e2"}},
         {dl, 1, -1, {"e3"}},
         {dl, 1, 0, {"e1"}},
         {bc, 1, -2, {"e4"}},
         {bc, 1, -1, {"e2"}},
         {bc, 1, 0, {"e4"}},
         {bc, 1, 1, {"e1"}},
         {a, 1, -2, {"e2"}},
         {a, 1, -1, {"e3"}},
         {a, 1, 0, {"e1"}},
         {a, 1, 1, {"e3"}},
         {d, 2, -1, {"e23", "e24"}},
         {d, 2, 1, {"e13", "e14"}},
         {dl, 2, -1, {"e23", "e24"}},
         {dl, 2, 1, {"e13", "e14"}},
         {bc, 2, -2, {"e24"}},
         {bc, 2, -1, {"e23", "e24", "e12-e34"}},
         {bc, 2, 0, {"e14"}},
         {bc, 2, 1, {"e13", "e14", "e12+e34"}},
         {a, 2, -1, {"e23", "e24", "e12+e34"}},
         {a, 2, 0, {"e23"}},
         {a, 2, 1, {"e13", "e14", "e12-e34"}},
         {a, 2, 2, {"e13"}},
         {d, 3, -1, {"e234"}},
         {d, 3, 0, {"e123"}},
         {d, 3, 1, {"e134"}},
         {dl, 3, 0, {"e234"}},
         {dl, 3, 1, {"e124"}},
         {dl, 3, 2, {"e134"}},
         {bc, 3, -1, {"e124"}},
         {bc, 3, 0, {"e234"}},
         {bc, 3, 1, {"e124"}},
         {bc, 3, 2, {"e134"}},
         {a, 3, -1, {"e234"}},
         {a, 3, 0, {"e123"}},
         {a, 3, 1, {"e134"}},
         {a, 3, 2, {"e123"}},
         {d, 4, 0, {"e1234"}},
         {dl, 4, 2, {"e1234"}},
         {bc, 4, 2, {"e1234"}},
         {a, 4, 0, {"e1234"}}});
}

/// Morse–Novikov dimensions only.
inline GoldenTable ot21_golden() {
    GoldenTable g{"ot21", 6, integer_weights(-1, 1), {Theory::deRham}, {}};
    const std::map<int, std::vector<std::size_t>> rows{
        {-1, {0, 0, 1, 2, 1, 0, 0}}, {0, {1, 2, 1, 0, 1, 2, 1}}, {1, {0, 0, 1, 2, 1, 0, 0}}};
    for (const auto& [k, dims] : rows)
        for (int h = 0; h <= 6; ++h)
            if (std::size_t dm = dims[static_cast<std::size_t>(h)]; dm != 0) g.cells.push_back({Theory::deRham, h, Scalar(k), dm, std::nullopt});
    return g;
}

}  // namespace detail

inline AlmostComplexStructure rh3_complex_structure() {
    Matrix j(4, 4);
    j(1, 0) = 1;
    j(0, 1) = -1;
    j(3, 2) = 1;
    j(2, 3) = -1;
    return AlmostComplexStructure(j);
}

inline LieAlgebra ot21_algebra(const Scalar& c1, const Scalar& c2) {
    Scalar half(1, 2);
    std::vector<Form> de{Form(6, 2),
                         Form(6, 2),
                         parse_form("-e13", 6),
                         parse_form("-e24", 6),
                         Form::monomial(6, {1, 5}, half) + Form::monomial(6, {1, 6}, c1) + Form::monomial(6, {2, 5}, half) +
                             Form::monomial(6, {2, 6}, c2),
                         Form::monomial(6, {1, 5}, -c1) + Form::monomial(6, {1, 6}, half) + Form::monomial(6, {2, 5}, -c2) +
                             Form::monomial(6, {2, 6}, half)};
    return LieAlgebra(de);
}

/// Ω from the two-parameter family with Lee form −e¹−e², taking ω25 = ω34 = 1 and the other free coefficients 0.
inline Form ot21_negative_omega(const Scalar& c1, const Scalar& c2) {
    Scalar den = 4 * c2 * c2 + 9;
    return Form::monomial(6, {1, 5}, (4 * c1 * c2 + 9) / den) + Form::monomial(6, {1, 6}, 6 * (c1 - c2) / den) +
           parse_form("e25+e34", 6);
}

inline std::vector<std::string> catalog_names() { return {"rh3", "d4", "ot21"}; }

/// Built-in examples. ot21 reads parameters c1, c2 (default 1, 0) and variant ("positive" or "negative" Lee form).
inline CatalogEntry builtin(const std::string& name, const std::map<std::string, Scalar>& params = {},
                            const std::string& variant = "positive") {
    if (name == "rh3") {
        if (!params.empty()) throw InvalidParameters("rh3 takes no parameters");
        std::string eq = "(0,0,12,0)";
        auto s = LcsStructure::create(parse_salamon(eq, 4), parse_form("e12+e34", 4), rh3_complex_structure(), "catalog");
        return {"rh3", "Kodaira-Thurston nilmanifold", eq, s, {}, detail::rh3_golden()};
    }
    if (name == "d4") {
        if (!params.empty()) throw InvalidParameters("d4 takes no parameters");
        std::string eq = "(14,-24,-12,0)";
        auto s = LcsStructure::create(parse_salamon(eq, 4), parse_form("e12+e34", 4));
        return {"d4", "Inoue surface of type S+", eq, s, {}, detail::d4_golden()};
    }
    if (name == "ot21") {
        std::map<std::string, Scalar> p{{"c1", Scalar(1)}, {"c2", Scalar(0)}};
        for (const auto& [key, v] : params) {
            if (!p.count(key)) throw InvalidParameters("unknown ot21 parameter '" + key + "'");
            p[key] = v;
        }
        const Scalar &c1 = p["c1"], &c2 = p["c2"];
        auto g = ot21_algebra(c1, c2);
        std::optional<LcsStructure> s;
        if (variant == "positive") {
            s = LcsStructure::create(g, parse_form("2*e13+e14+e23+2*e24+e56", 6));
        } else if (variant == "negative") {
            if (c1 == c2) throw InvalidParameters("the Lee form −e1−e2 needs c1 ≠ c2");
            s = LcsStructure::create(g, ot21_negative_omega(c1, c2));
        } else {
            throw InvalidParameters("unknown ot21 variant '" + variant + "'");
        }
        std::optional<GoldenTable> golden;
        if (variant == "positive") golden = detail::ot21_golden();
        return {"ot21", "Oeljeklaus-Toma manifold of type (2,1)", pretty_print(g), *s, p, golden};
    }
    throw UnknownEntry("no catalog entry '" + name + "'");
}

}  // namespace lcsc
