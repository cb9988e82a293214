#pragma once

#include "lcsc/lcs.hpp"

namespace fixtures {

using namespace lcsc;

inline AlmostComplexStructure rh3_j() {
    Matrix j(4, 4);
    j(1, 0) = 1;
    j(0, 1) = -1;
    j(3, 2) = 1;
    j(2, 3) = -1;
    return AlmostComplexStructure(j);
}

inline LcsStructure rh3() {
    return LcsStructure::create(parse_salamon("(0,0,12,0)", 4), parse_form("e12+e34", 4), rh3_j());
}

inline LcsStructure d4() { return LcsStructure::create(parse_salamon("(14,-24,-12,0)", 4), parse_form("e12+e34", 4)); }

inline LieAlgebra ot21_algebra(const Scalar& c1, const Scalar& c2) {
    Scalar h(1, 2);
    std::vector<Form> de{Form(6, 2), Form(6, 2), parse_form("-e13", 6), parse_form("-e24", 6),
                         Form::monomial(6, {1, 5}, h) + Form::monomial(6, {1, 6}, c1) + Form::monomial(6, {2, 5}, h) + Form::monomial(6, {2, 6}, c2),
                         Form::monomial(6, {1, 5}, -c1) + Form::monomial(6, {1, 6}, h) + Form::monomial(6, {2, 5}, -c2) + Form::monomial(6, {2, 6}, h)};
    return LieAlgebra(de);
}

inline LcsStructure ot21(const Scalar& c1 = 1, const Scalar& c2 = 0) {
    return LcsStructure::create(ot21_algebra(c1, c2), parse_form("2*e13+e14+e23+2*e24+e56", 6));
}

inline LcsStructure abelian4() { return LcsStructure::create(LieAlgebra::abelian(4), parse_form("e12+e34", 4)); }

}  // namespace fixtures
