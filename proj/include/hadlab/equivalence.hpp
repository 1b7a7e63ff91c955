#pragma once

#include <array>
#include <optional>

#include "hadlab/matrix.hpp"
#include "hadlab/rng.hpp"

namespace hadlab {

// Row/column permutation plus unimodular row/column scalings.
// Applying the move: out[row_perm[i]][col_perm[j]] =
//   row_phases[row_perm[i]] * col_phases[col_perm[j]] * in[i][j].
struct EquivalenceMove {
    std::array<int, 6> row_perm{0, 1, 2, 3, 4, 5};
    std::array<int, 6> col_perm{0, 1, 2, 3, 4, 5};
    std::array<UnimodEntry, 6> row_phases{};
    std::array<UnimodEntry, 6> col_phases{};

    static EquivalenceMove identity() { return {}; }
};

CHMatrix apply_equivalence(const CHMatrix& m, const EquivalenceMove& mv);

// compose(second, first) acts as: apply first, then second.
EquivalenceMove compose(const EquivalenceMove& second, const EquivalenceMove& first);

EquivalenceMove inverse(const EquivalenceMove& mv);

// The move whose application equals dephase(m, pivot_row, pivot_col).
EquivalenceMove dephase_move(const CHMatrix& m, int pivot_row, int pivot_col);

EquivalenceMove random_move(Rng& rng);

struct EquivalenceResult {
    bool equivalent;
    std::optional<EquivalenceMove> witness;
};

// Exhaustive decision procedure: two Hadamard matrices are equivalent iff for
// some pivot of A the dephased form of A matches the dephased form of B after
// permuting non-initial rows and columns. The search runs over all 36 pivots
// with per-row multiset pruning; a verified witness move is returned on
// success. Rejects non-Hadamard input.
EquivalenceResult are_equivalent(const CHMatrix& a, const CHMatrix& b,
                                 const Tolerances& tol = {});

} // namespace hadlab
