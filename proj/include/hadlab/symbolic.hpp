#pragma once

#include <array>
#include <string>
#include <vector>

#include "hadlab/laurent.hpp"

namespace hadlab {

// Matrix whose entries are signed Laurent monomials (such as "-q*w*p^-1").
// Supports the polynomial forms of the row-orthogonality, cancelling-product,
// and three-row/four-column vanishing expressions with exact arithmetic.
class SymbolicMatrix {
public:
    static SymbolicMatrix from_strings(const std::vector<std::vector<std::string>>& entries);

    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return entries_.empty() ? 0 : static_cast<int>(entries_[0].size()); }

    SymbolicMatrix transposed() const;

    const LaurentPoly& entry(int r, int c) const;
    LaurentPoly entry_inverse(int r, int c) const;

private:
    std::vector<std::vector<LaurentPoly>> entries_;
};

// Inner product of rows x and y cleared of inverses: the sum over columns v
// of S[x][v] times the product of S[y][v'] over v' != v. Vanishes exactly
// when the rows are formally orthogonal.
LaurentPoly build_ort(const SymbolicMatrix& s, int x, int y);

// Product over non-initial columns q of (S[x][0] S[y][q] + S[x][q] S[y][0]);
// a factor vanishes exactly when column q cancels the initial column in the
// row-ratio sum.
LaurentPoly build_cancel(const SymbolicMatrix& s, int x, int y);

struct HaagerupPolys {
    LaurentPoly bracket; // may carry inverted entries
    LaurentPoly full;    // bracket times the product of the twelve entries
};

HaagerupPolys build_haagerup(const SymbolicMatrix& s, const std::array<int, 3>& rows,
                             const std::array<int, 4>& cols);

} // namespace hadlab
