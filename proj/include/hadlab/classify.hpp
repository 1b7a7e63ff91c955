#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hadlab/equivalence.hpp"
#include "hadlab/families.hpp"
#include "hadlab/matrix.hpp"

namespace hadlab {

enum class FamilyVerdict { TransposedFourier, TwoCirculant, Both, None };

const char* to_string(FamilyVerdict v);

// Three -1 entries in distinct rows and distinct columns (rows[i] pairs with
// cols[i]); all indices are non-initial (>= 1).
struct PatternB {
    std::array<int, 3> rows;
    std::array<int, 3> cols;
};

// Smallest non-initial row holding at least three entries within eps_entry of
// -1. Input must be normalized (all-ones first row and column).
std::optional<int> detect_pattern_a(const CHMatrix& normalized, const Tolerances& tol = {});

// First system of distinct representatives in the -1 incidence between
// non-initial rows and columns (row triples in lexicographic order).
std::optional<PatternB> detect_pattern_b(const CHMatrix& normalized,
                                         const Tolerances& tol = {});

// Every distinct-representative system, used by the matrix-level recovery.
std::vector<PatternB> all_pattern_b(const CHMatrix& normalized, const Tolerances& tol = {});

struct CancellingSummary {
    std::array<bool, 15> graph; // row pairs (0,1),(0,2),...,(4,5) in lex order
    bool regular;
    std::optional<std::array<int, 3>> triangle;
};

using Pairing = std::array<std::array<int, 2>, 3>;

struct KarlssonPairing {
    Pairing row_pairs;
    Pairing col_pairs;
};

struct ClassificationReport {
    FamilyVerdict verdict = FamilyVerdict::None;
    std::optional<int> pattern_a;
    std::optional<PatternB> pattern_b;
    bool regular = false;
    std::optional<std::array<int, 3>> dita_triangle;
    std::optional<KarlssonPairing> karlsson;
};

// Dephases at pivot (0,0), reads both -1 patterns, and augments the verdict
// with the cancelling/regular/triangle and 2x2-block structure of the input.
// Throws NotHadamard when rows are not pairwise orthogonal.
ClassificationReport classify(const CHMatrix& m, const Tolerances& tol = {});

struct PivotSweep {
    std::vector<FamilyVerdict> verdicts; // 36 entries, pivot (r,c) at index 6r+c
    bool consistent;
};

PivotSweep classify_all_pivots(const CHMatrix& m, const Tolerances& tol = {});

// True iff the term-pair test anchored at column 0 fires: some q >= 1 has
// M[i][0]/M[j][0] + M[i][q]/M[j][q] ~ 0. Requires rows i, j orthogonal.
bool is_cancelling_pair(const CHMatrix& m, int i, int j, const Tolerances& tol = {});

// Independent oracle: the six ratio terms split into three pairs each summing
// to ~0. Agrees with is_cancelling_pair on orthogonal unimodular rows.
bool partition_cancelling(const CHMatrix& m, int i, int j, const Tolerances& tol = {});

CancellingSummary cancelling_summary(const CHMatrix& m, const Tolerances& tol = {});

// First row/column pairing (canonical enumeration order) under which all nine
// 2x2 blocks have orthogonal rows; nullopt when none exists.
std::optional<KarlssonPairing> karlsson_blocks(const CHMatrix& m, const Tolerances& tol = {});

int pair_index(int i, int j); // lex index of an unordered pair in 0..14

struct F6TRecovery {
    UnimodEntry a, b;
    // Applying the certificate to the input reproduces f6t(a, b) exactly.
    EquivalenceMove certificate;
};

// Rebuilds the transposed-Fourier normal form: the three--1 row moves to
// position 1, its +1 columns to the front, remaining rows sort by their
// cube-root signature, and the last three columns rotate into (a, aw, aw^2)
// order. Throws PatternMissing when the structure is absent.
F6TRecovery recover_f6t(const CHMatrix& m, const Tolerances& tol = {});

// The three cube-root parameter branches for a normalized diagonal form with
// scalars (a,b,c,d); every branch yields the same matrix. Throws
// RelationViolation unless the h33 relation and its conjugate hold.
std::array<X6Params, 3> recover_x6(UnimodEntry a, UnimodEntry b, UnimodEntry c,
                                   UnimodEntry d, const Tolerances& tol = {});

struct X6MatrixRecovery {
    std::array<UnimodEntry, 4> abcd;
    std::array<X6Params, 3> params;
    EquivalenceMove certificate; // maps the input onto x6(params[k]) exactly
};

// Searches pivots and -1-matching permutations for a 2-circulant normal form
// of the given Hadamard matrix. Throws PatternMissing when none validates.
X6MatrixRecovery recover_x6_from_matrix(const CHMatrix& m, const Tolerances& tol = {});

} // namespace hadlab
