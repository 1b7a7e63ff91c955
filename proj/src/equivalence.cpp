#include "hadlab/equivalence.hpp"

#include <algorithm>
#include <cmath>

#include "hadlab/errors.hpp"

namespace hadlab {

CHMatrix apply_equivalence(const CHMatrix& m, const EquivalenceMove& mv) {
    if (m.rows() != 6 || m.cols() != 6)
        throw std::invalid_argument("equivalence moves act on 6x6 matrices");
    CHMatrix out(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const int ti = mv.row_perm[i];
            const int tj = mv.col_perm[j];
            out.at(ti, tj) = mv.row_phases[ti] * mv.col_phases[tj] * m.at(i, j);
        }
    return out;
}

EquivalenceMove compose(const EquivalenceMove& second, const EquivalenceMove& first) {
    EquivalenceMove r;
    for (int i = 0; i < 6; ++i) {
        const int mid = first.row_perm[i];
        const int tgt = second.row_perm[mid];
        r.row_perm[i] = tgt;
        r.row_phases[tgt] = second.row_phases[tgt] * first.row_phases[mid];
    }
    for (int j = 0; j < 6; ++j) {
        const int mid = first.col_perm[j];
        const int tgt = second.col_perm[mid];
        r.col_perm[j] = tgt;
        r.col_phases[tgt] = second.col_phases[tgt] * first.col_phases[mid];
    }
    return r;
}

EquivalenceMove inverse(const EquivalenceMove& mv) {
    EquivalenceMove r;
    for (int i = 0; i < 6; ++i) {
        r.row_perm[mv.row_perm[i]] = i;
        r.row_phases[i] = mv.row_phases[mv.row_perm[i]].conj();
    }
    for (int j = 0; j < 6; ++j) {
        r.col_perm[mv.col_perm[j]] = j;
        r.col_phases[j] = mv.col_phases[mv.col_perm[j]].conj();
    }
    return r;
}

EquivalenceMove dephase_move(const CHMatrix& m, int pivot_row, int pivot_col) {
    if (m.rows() != 6 || m.cols() != 6)
        throw std::invalid_argument("dephase_move acts on 6x6 matrices");
    EquivalenceMove mv;
    std::swap(mv.row_perm[0], mv.row_perm[pivot_row]);
    std::swap(mv.col_perm[0], mv.col_perm[pivot_col]);
    // T is m with the pivot row/column swapped into position 0.
    auto t = [&](int i, int j) {
        const int si = i == 0 ? pivot_row : (i == pivot_row ? 0 : i);
        const int sj = j == 0 ? pivot_col : (j == pivot_col ? 0 : j);
        return m.at(si, sj);
    };
    const UnimodEntry corner = t(0, 0);
    for (int i = 0; i < 6; ++i)
        mv.row_phases[i] = corner / t(i, 0);
    for (int j = 0; j < 6; ++j)
        mv.col_phases[j] = UnimodEntry() / t(0, j);
    return mv;
}

EquivalenceMove random_move(Rng& rng) {
    EquivalenceMove mv;
    for (int i = 5; i >= 1; --i) {
        std::swap(mv.row_perm[i], mv.row_perm[rng.below(i + 1)]);
        std::swap(mv.col_perm[i], mv.col_perm[rng.below(i + 1)]);
    }
    for (int i = 0; i < 6; ++i) {
        mv.row_phases[i] = rng.unimodular();
        mv.col_phases[i] = rng.unimodular();
    }
    return mv;
}

namespace {

// Per-row invariant under column permutation: the sorted real parts and the
// sorted imaginary parts of the row's entries. Sorted 1-D lists of
// eps-matched multisets stay pointwise eps-close, so comparing them with a
// coarser threshold can never prune a genuine match.
struct RowSig {
    std::array<double, 6> res;
    std::array<double, 6> ims;
};

RowSig row_sig(const CHMatrix& m, int i) {
    RowSig s;
    for (int j = 0; j < 6; ++j) {
        s.res[j] = m.at(i, j).re;
        s.ims[j] = m.at(i, j).im;
    }
    std::sort(s.res.begin(), s.res.end());
    std::sort(s.ims.begin(), s.ims.end());
    return s;
}

bool sig_close(const RowSig& a, const RowSig& b, double eps) {
    for (int k = 0; k < 6; ++k)
        if (std::abs(a.res[k] - b.res[k]) > eps || std::abs(a.ims[k] - b.ims[k]) > eps)
            return false;
    return true;
}

struct MatchSearch {
    const CHMatrix& da;
    const CHMatrix& db;
    double eps;
    std::array<RowSig, 6> sig_a;
    std::array<RowSig, 6> sig_b;
    std::array<int, 6> row_of{};    // row_of[i] = row of DA matched to row i of DB
    std::array<bool, 6> row_used{};
    std::array<int, 6> col_of{};
    std::array<bool, 6> col_used{};

    bool assign_cols() {
        std::array<std::vector<int>, 6> cand;
        for (int j = 1; j < 6; ++j)
            for (int l = 1; l < 6; ++l) {
                bool ok = true;
                for (int i = 1; i < 6 && ok; ++i)
                    ok = std::abs(da.value(row_of[i], l) - db.value(i, j)) <= eps;
                if (ok)
                    cand[j].push_back(l);
            }
        col_of[0] = 0;
        col_used.fill(false);
        col_used[0] = true;
        return place_col(1, cand);
    }

    bool place_col(int j, const std::array<std::vector<int>, 6>& cand) {
        if (j == 6)
            return true;
        for (int l : cand[j]) {
            if (col_used[l])
                continue;
            col_used[l] = true;
            col_of[j] = l;
            if (place_col(j + 1, cand))
                return true;
            col_used[l] = false;
        }
        return false;
    }

    bool assign_rows(int i) {
        if (i == 6)
            return assign_cols();
        for (int r = 1; r < 6; ++r) {
            if (row_used[r] || !sig_close(sig_a[r], sig_b[i], 1e-6))
                continue;
            row_used[r] = true;
            row_of[i] = r;
            if (assign_rows(i + 1))
                return true;
            row_used[r] = false;
        }
        return false;
    }

    bool run() {
        for (int i = 0; i < 6; ++i) {
            sig_a[i] = row_sig(da, i);
            sig_b[i] = row_sig(db, i);
        }
        row_of[0] = 0;
        row_used.fill(false);
        row_used[0] = true;
        return assign_rows(1);
    }
};

} // namespace

EquivalenceResult are_equivalent(const CHMatrix& a, const CHMatrix& b,
                                 const Tolerances& tol) {
    tol.validate();
    const auto ha = is_hadamard(a, tol);
    if (!ha.ok)
        throw NotHadamard("first argument is not Hadamard (residual " +
                          std::to_string(ha.max_residual) + ")");
    const auto hb = is_hadamard(b, tol);
    if (!hb.ok)
        throw NotHadamard("second argument is not Hadamard (residual " +
                          std::to_string(hb.max_residual) + ")");

    const CHMatrix db = dephase(b, 0, 0);
    const EquivalenceMove move_b = dephase_move(b, 0, 0);

    for (int pr = 0; pr < 6; ++pr)
        for (int pc = 0; pc < 6; ++pc) {
            const CHMatrix da = dephase(a, pr, pc);
            MatchSearch search{da, db, tol.eps_entry, {}, {}, {}, {}, {}, {}};
            if (!search.run())
                continue;
            EquivalenceMove perm;
            for (int i = 0; i < 6; ++i) {
                perm.row_perm[search.row_of[i]] = i;
                perm.col_perm[search.col_of[i]] = i;
            }
            const EquivalenceMove move_a = dephase_move(a, pr, pc);
            // perm(move_a(A)) = DB = move_b(B), so inverse(move_b) closes the loop.
            EquivalenceMove witness = compose(inverse(move_b), compose(perm, move_a));
            const CHMatrix check = apply_equivalence(a, witness);
            if (!check.entrywise_close(b, std::max(tol.eps_entry, 1e-8)))
                throw std::logic_error("equivalence witness failed verification");
            return {true, witness};
        }
    return {false, std::nullopt};
}

} // namespace hadlab
