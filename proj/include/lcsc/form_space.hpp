#pragma once

#include "lcsc/exterior.hpp"
#include "lcsc/subspace.hpp"

#include <vector>

namespace lcsc {

/// Subspace of ∧^h spanned by the given forms (all of degree h).
inline Subspace form_span(int m, int h, const std::vector<Form>& forms) {
    std::vector<Vector> vecs;
    for (const auto& f : forms) {
        if (f.dimension() != m || f.degree() != h) throw DimensionMismatch("form of wrong dimension or degree in span");
        vecs.push_back(f.to_vector());
    }
    return Subspace::span(exterior_basis(m).size(h), vecs);
}

inline std::vector<Form> forms_of(int m, int h, const Subspace& s) {
    std::vector<Form> out;
    for (const auto& v : s.basis()) out.push_back(Form::from_vector(m, h, v));
    return out;
}

struct SubspaceOps {
    std::vector<Form> sum;
    std::vector<Form> intersection;
    std::vector<Form> quotient;  // representatives of U / (U ∩ V), orthogonal to U ∩ V
};

/// Sum, intersection and a quotient complement for two lists of degree-h forms.
inline SubspaceOps subspace_ops(int m, int h, const std::vector<Form>& u, const std::vector<Form>& v) {
    Subspace su = form_span(m, h, u), sv = form_span(m, h, v);
    Subspace cap = intersection(su, sv);
    return {forms_of(m, h, sum(su, sv)), forms_of(m, h, cap), forms_of(m, h, su.complement_of(cap))};
}

}  // namespace lcsc
