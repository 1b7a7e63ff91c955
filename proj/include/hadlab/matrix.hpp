#pragma once

#include <complex>
#include <vector>

#include "hadlab/tolerances.hpp"
#include "hadlab/unimod.hpp"

namespace hadlab {

// Grid of unimodular entries. Allowed shapes: r x 6 with r in {2,3,4,6}
// (6x6 for Hadamard candidates, 3x6 and 4x6 for the partial-row families).
class CHMatrix {
public:
    CHMatrix(int rows, int cols);

    static CHMatrix from_rows(const std::vector<std::vector<UnimodEntry>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    UnimodEntry& at(int i, int j);
    const UnimodEntry& at(int i, int j) const;

    std::complex<double> value(int i, int j) const { return at(i, j).value(); }

    CHMatrix transposed() const; // square matrices only

    bool entrywise_close(const CHMatrix& other, double eps) const;

private:
    int rows_;
    int cols_;
    std::vector<UnimodEntry> entries_;
};

// Hermitian inner product of rows i and j: sum_k M[i][k] / M[j][k].
std::complex<double> inner_product_rows(const CHMatrix& m, int i, int j);

// Largest |inner product| over distinct row pairs.
double max_offdiag_row_residual(const CHMatrix& m);

struct HadamardCheck {
    bool ok;
    double max_residual;
};

// All distinct row pairs orthogonal within eps_orth. Requires a 6x6 input.
HadamardCheck is_hadamard(const CHMatrix& m, const Tolerances& tol = {});

// Moves the pivot row/column to position 0 (by transpositions), then scales
// rows and columns so row 0 and column 0 become all ones:
//   out[i][j] = T[i][j] * T[0][0] / (T[i][0] * T[0][j]).
CHMatrix dephase(const CHMatrix& m, int pivot_row = 0, int pivot_col = 0);

bool is_normalized(const CHMatrix& m, double eps);

} // namespace hadlab
