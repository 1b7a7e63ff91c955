#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hadlab {

struct WitnessReport {
    bool holds = false;
    // Term counts of the summands on the left-hand side, in order.
    std::vector<std::size_t> component_terms;
    std::size_t residual_terms = 0;
    std::string residual; // canonical form of lhs - rhs; "0" when the identity holds
};

// The bundled exact identities, checked in Laurent arithmetic over the
// rationals (no floating point involved).
//
// "l62": for the 4x4 monomial matrix
//   [[1,1,1,1],[1,-1,1,-1],[1,b,p,q],[1,-b,w,-q*w/p]]
// the combination P1*Q1 + P2*Q2 + P3*Q3 + P4*Q4 of its three-row/four-column
// vanishing polynomials (P3 taken on the transpose, P4 = u*b*p*q*w + 1)
// against fixed cofactors Q1..Q4 collapses to 8*(b - q*w)*(1 + w + w^2).
WitnessReport witness_check_l62();

// "p63": -b*q*u*(1+w+w^2) + u*w*(b^2+b*q+q^2) + (q-b*w)*(u*(b-q*w)+1)
// collapses to q - b*w.
WitnessReport witness_check_p63();

} // namespace hadlab
