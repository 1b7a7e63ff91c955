#pragma once

#include <array>
#include <complex>
#include <vector>

#include "hadlab/matrix.hpp"

namespace hadlab {

// Three-row/four-column vanishing expression. With I(x,y) denoting the
// partial inner product sum_{v in cols} M[x][v]/M[y][v], the value is
//   I(i,j)I(j,k)I(k,i) - 4 + I(i,j)I(j,i) + I(j,k)I(k,j) + I(k,i)I(i,k).
// With transposed set, row/column indices address the transposed grid, which
// keeps the expression available for wide matrices whose transpose would not
// be constructible.
std::complex<double> haagerup_bracket(const CHMatrix& m, const std::array<int, 3>& rows,
                                      const std::array<int, 4>& cols,
                                      bool transposed = false);

// The bracket multiplied by the product of the twelve participating entries;
// this clears the inverted entries into polynomial form.
std::complex<double> haagerup_full(const CHMatrix& m, const std::array<int, 3>& rows,
                                   const std::array<int, 4>& cols, bool transposed = false);

struct BracketLocation {
    std::array<int, 3> rows;
    std::array<int, 4> cols;
    bool transposed;
};

struct ScanReport {
    double max_abs = 0.0;
    BracketLocation argmax{{0, 1, 2}, {0, 1, 2, 3}, false};
};

// Largest |bracket| over both orientations of a 6x6 matrix, all 20 row
// triples and 15 column quadruples (600 evaluations). Near zero on Hadamard
// matrices; generically large on random unimodular grids.
ScanReport haagerup_scan(const CHMatrix& m);

// Sorted deduplicated cross-ratio set: values M[i][j]M[k][l] / (M[i][l]M[k][j])
// over all i != k, j != l, rounded to a 1e-8 grid componentwise. Closed under
// conjugation and invariant under row/column scalings; a cheap heuristic
// separator (differing sets are strong evidence against equivalence, equal
// sets certify nothing).
std::vector<std::complex<double>> haagerup_fingerprint(const CHMatrix& m);

} // namespace hadlab
