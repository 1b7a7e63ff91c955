#include "hadlab/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hadlab {

namespace {

void require_six_by_six(const CHMatrix& m, const char* fn) {
    if (m.rows() != 6 || m.cols() != 6)
        throw std::invalid_argument(std::string(fn) + " requires a 6x6 matrix");
}

void require_normalized(const CHMatrix& m, const Tolerances& tol) {
    if (!is_normalized(m, tol.eps_entry))
        throw NotNormalized("pattern detection requires an all-ones first row and column");
}

// -1 positions among non-initial columns, per non-initial row.
std::array<std::vector<int>, 6> minus_incidence(const CHMatrix& m, const Tolerances& tol) {
    std::array<std::vector<int>, 6> inc;
    for (int r = 1; r < 6; ++r)
        for (int c = 1; c < 6; ++c)
            if (m.at(r, c).close_to({-1.0, 0.0}, tol.eps_entry)) inc[r].push_back(c);
    return inc;
}

void collect_matchings(const std::array<std::vector<int>, 6>& inc, bool first_only,
                       std::vector<PatternB>& out) {
    for (int r1 = 1; r1 <= 3; ++r1)
        for (int r2 = r1 + 1; r2 <= 4; ++r2)
            for (int r3 = r2 + 1; r3 <= 5; ++r3)
                for (int c1 : inc[r1])
                    for (int c2 : inc[r2]) {
                        if (c2 == c1) continue;
                        for (int c3 : inc[r3]) {
                            if (c3 == c1 || c3 == c2) continue;
                            out.push_back(PatternB{{r1, r2, r3}, {c1, c2, c3}});
                            if (first_only) return;
                        }
                    }
}

const std::vector<Pairing>& all_pairings() {
    static const std::vector<Pairing> pairings = [] {
        std::vector<Pairing> out;
        Pairing cur{};
        std::array<bool, 6> used{};
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == 3) {
                out.push_back(cur);
                return;
            }
            int a = 0;
            while (used[a]) ++a;
            used[a] = true;
            for (int b = a + 1; b < 6; ++b) {
                if (used[b]) continue;
                used[b] = true;
                cur[depth] = {a, b};
                self(self, depth + 1);
                used[b] = false;
            }
            used[a] = false;
        };
        rec(rec, 0);
        return out;
    }();
    return pairings;
}

FamilyVerdict verdict_from_patterns(bool has_a, bool has_b) {
    if (has_a && has_b) return FamilyVerdict::Both;
    if (has_a) return FamilyVerdict::TransposedFourier;
    if (has_b) return FamilyVerdict::TwoCirculant;
    return FamilyVerdict::None;
}

// Permutation-only move sending row i to row_to[i] and column j to col_to[j].
EquivalenceMove perm_move(const std::array<int, 6>& row_to, const std::array<int, 6>& col_to) {
    EquivalenceMove mv;
    mv.row_perm = row_to;
    mv.col_perm = col_to;
    return mv;
}

} // namespace

const char* to_string(FamilyVerdict v) {
    switch (v) {
    case FamilyVerdict::TransposedFourier: return "TransposedFourier";
    case FamilyVerdict::TwoCirculant: return "TwoCirculant";
    case FamilyVerdict::Both: return "Both";
    case FamilyVerdict::None: return "None";
    }
    return "None";
}

std::optional<int> detect_pattern_a(const CHMatrix& normalized, const Tolerances& tol) {
    require_six_by_six(normalized, "detect_pattern_a");
    require_normalized(normalized, tol);
    const auto inc = minus_incidence(normalized, tol);
    for (int r = 1; r < 6; ++r)
        if (inc[r].size() >= 3) return r;
    return std::nullopt;
}

std::optional<PatternB> detect_pattern_b(const CHMatrix& normalized, const Tolerances& tol) {
    require_six_by_six(normalized, "detect_pattern_b");
    require_normalized(normalized, tol);
    std::vector<PatternB> found;
    collect_matchings(minus_incidence(normalized, tol), true, found);
    if (found.empty()) return std::nullopt;
    return found.front();
}

std::vector<PatternB> all_pattern_b(const CHMatrix& normalized, const Tolerances& tol) {
    require_six_by_six(normalized, "all_pattern_b");
    require_normalized(normalized, tol);
    std::vector<PatternB> found;
    collect_matchings(minus_incidence(normalized, tol), false, found);
    return found;
}

int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > 5 || i == j) throw std::invalid_argument("pair_index needs 0 <= i < j <= 5");
    return i * 5 - i * (i - 1) / 2 + (j - i - 1);
}

bool is_cancelling_pair(const CHMatrix& m, int i, int j, const Tolerances& tol) {
    if (i == j) throw std::invalid_argument("is_cancelling_pair needs two distinct rows");
    const std::complex<double> ip = inner_product_rows(m, i, j);
    if (std::abs(ip) > tol.eps_orth)
        throw NonOrthogonalRows("cancelling test requires orthogonal rows");
    const std::complex<double> r0 = m.value(i, 0) * std::conj(m.value(j, 0));
    for (int q = 1; q < m.cols(); ++q) {
        const std::complex<double> rq = m.value(i, q) * std::conj(m.value(j, q));
        if (std::abs(r0 + rq) <= tol.eps_entry) return true;
    }
    return false;
}

bool partition_cancelling(const CHMatrix& m, int i, int j, const Tolerances& tol) {
    if (i == j) throw std::invalid_argument("partition_cancelling needs two distinct rows");
    const std::complex<double> ip = inner_product_rows(m, i, j);
    if (std::abs(ip) > tol.eps_orth)
        throw NonOrthogonalRows("cancelling test requires orthogonal rows");
    const int n = m.cols();
    std::vector<std::complex<double>> terms(n);
    for (int q = 0; q < n; ++q) terms[q] = m.value(i, q) * std::conj(m.value(j, q));
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int remaining) -> bool {
        if (remaining == 0) return true;
        int a = 0;
        while (used[a]) ++a;
        used[a] = true;
        for (int b = a + 1; b < n; ++b) {
            if (used[b] || std::abs(terms[a] + terms[b]) > tol.eps_entry) continue;
            used[b] = true;
            if (self(self, remaining - 2)) return true;
            used[b] = false;
        }
        used[a] = false;
        return false;
    };
    return rec(rec, n);
}

CancellingSummary cancelling_summary(const CHMatrix& m, const Tolerances& tol) {
    require_six_by_six(m, "cancelling_summary");
    CancellingSummary s{};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            s.graph[pair_index(i, j)] = is_cancelling_pair(m, i, j, tol);
    s.regular = std::all_of(s.graph.begin(), s.graph.end(), [](bool b) { return b; });
    s.triangle = std::nullopt;
    for (int i = 0; i < 6 && !s.triangle; ++i)
        for (int j = i + 1; j < 6 && !s.triangle; ++j)
            for (int k = j + 1; k < 6 && !s.triangle; ++k)
                if (s.graph[pair_index(i, j)] && s.graph[pair_index(i, k)] &&
                    s.graph[pair_index(j, k)])
                    s.triangle = std::array<int, 3>{i, j, k};
    return s;
}

std::optional<KarlssonPairing> karlsson_blocks(const CHMatrix& m, const Tolerances& tol) {
    require_six_by_six(m, "karlsson_blocks");
    const auto& pairings = all_pairings();
    auto block_rows_orthogonal = [&](const std::array<int, 2>& rp,
                                     const std::array<int, 2>& cp) {
        const std::complex<double> t1 =
            m.value(rp[0], cp[0]) * std::conj(m.value(rp[1], cp[0]));
        const std::complex<double> t2 =
            m.value(rp[0], cp[1]) * std::conj(m.value(rp[1], cp[1]));
        return std::abs(t1 + t2) <= tol.eps_entry;
    };
    for (const Pairing& rows : pairings)
        for (const Pairing& cols : pairings) {
            bool ok = true;
            for (int a = 0; a < 3 && ok; ++a)
                for (int b = 0; b < 3 && ok; ++b)
                    ok = block_rows_orthogonal(rows[a], cols[b]);
            if (ok) return KarlssonPairing{rows, cols};
        }
    return std::nullopt;
}

ClassificationReport classify(const CHMatrix& m, const Tolerances& tol) {
    tol.validate();
    const HadamardCheck chk = is_hadamard(m, tol);
    if (!chk.ok)
        throw NotHadamard("rows are not pairwise orthogonal (max residual " +
                          std::to_string(chk.max_residual) + ")");
    const CHMatrix n = dephase(m, 0, 0);
    ClassificationReport rep;
    rep.pattern_a = detect_pattern_a(n, tol);
    rep.pattern_b = detect_pattern_b(n, tol);
    rep.verdict = verdict_from_patterns(rep.pattern_a.has_value(), rep.pattern_b.has_value());
    const CancellingSummary s = cancelling_summary(m, tol);
    rep.regular = s.regular;
    rep.dita_triangle = s.triangle;
    rep.karlsson = karlsson_blocks(m, tol);
    return rep;
}

PivotSweep classify_all_pivots(const CHMatrix& m, const Tolerances& tol) {
    tol.validate();
    const HadamardCheck chk = is_hadamard(m, tol);
    if (!chk.ok) throw NotHadamard("rows are not pairwise orthogonal");
    PivotSweep sweep;
    sweep.verdicts.reserve(36);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            const CHMatrix n = dephase(m, r, c);
            sweep.verdicts.push_back(verdict_from_patterns(
                detect_pattern_a(n, tol).has_value(), detect_pattern_b(n, tol).has_value()));
        }
    sweep.consistent = std::all_of(sweep.verdicts.begin(), sweep.verdicts.end(),
                                   [&](FamilyVerdict v) { return v == sweep.verdicts[0]; });
    return sweep;
}

F6TRecovery recover_f6t(const CHMatrix& m, const Tolerances& tol) {
    tol.validate();
    require_six_by_six(m, "recover_f6t");
    if (!is_hadamard(m, tol).ok)
        throw NotHadamard("recovery requires pairwise orthogonal rows");
    const EquivalenceMove md = dephase_move(m, 0, 0);
    const CHMatrix n = apply_equivalence(m, md);

    const auto pa = detect_pattern_a(n, tol);
    if (!pa) throw PatternMissing("no row carries three -1 entries after dephasing");
    const int pr = *pa;
    std::vector<int> minus, plus;
    for (int c = 0; c < 6; ++c)
        (n.at(pr, c).close_to({-1.0, 0.0}, tol.eps_entry) ? minus : plus).push_back(c);
    if (minus.size() != 3)
        throw PatternMissing("the -1 row does not split the columns three/three");

    // Stage 1: -1 row to position 1, +1 columns to the front.
    std::array<int, 6> row_to{}, col_to{};
    {
        int next = 2;
        for (int r = 0; r < 6; ++r) row_to[r] = (r == 0) ? 0 : (r == pr ? 1 : next++);
        for (int k = 0; k < 3; ++k) {
            col_to[plus[static_cast<size_t>(k)]] = k;
            col_to[minus[static_cast<size_t>(k)]] = 3 + k;
        }
    }
    const EquivalenceMove mv1 = perm_move(row_to, col_to);
    const CHMatrix p = apply_equivalence(n, mv1);

    // Stage 2: order the remaining rows by their cube-root signature at
    // column 1 (the two rows starting 1,w,w^2 before the two starting
    // 1,w^2,w).
    const std::complex<double> w = cube_root_unity(WChoice::W1).value();
    std::vector<int> wa, wb;
    for (int r = 2; r < 6; ++r) {
        if (p.at(r, 1).close_to(w, tol.eps_entry))
            wa.push_back(r);
        else if (p.at(r, 1).close_to(std::conj(w), tol.eps_entry))
            wb.push_back(r);
    }
    if (wa.size() != 2 || wb.size() != 2)
        throw PatternMissing("rows do not split two/two by cube-root signature");
    std::array<int, 6> row_to2{0, 1, 2, 3, 4, 5};
    row_to2[wa[0]] = 2;
    row_to2[wa[1]] = 3;
    row_to2[wb[0]] = 4;
    row_to2[wb[1]] = 5;
    const EquivalenceMove mv2 = perm_move(row_to2, {0, 1, 2, 3, 4, 5});
    const CHMatrix q = apply_equivalence(p, mv2);

    // Stage 3: rotate the back columns so row 2 reads (a, aw, aw^2) there.
    std::array<int, 3> order{3, 4, 5};
    bool rotated = false;
    do {
        const std::complex<double> z0 = q.value(2, order[0]);
        if (std::abs(q.value(2, order[1]) / z0 - w) <= tol.eps_entry &&
            std::abs(q.value(2, order[2]) / z0 - std::conj(w)) <= tol.eps_entry) {
            rotated = true;
            break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    if (!rotated) throw PatternMissing("back columns admit no (a, aw, aw^2) rotation");
    std::array<int, 6> col_to3{0, 1, 2, 3, 4, 5};
    for (int k = 0; k < 3; ++k) col_to3[order[static_cast<size_t>(k)]] = 3 + k;
    const EquivalenceMove mv3 = perm_move({0, 1, 2, 3, 4, 5}, col_to3);
    const CHMatrix r = apply_equivalence(q, mv3);

    F6TRecovery rec{r.at(2, 3), r.at(4, 3),
                    compose(mv3, compose(mv2, compose(mv1, md)))};
    if (!r.entrywise_close(f6t(rec.a, rec.b), tol.eps_entry))
        throw PatternMissing("candidate normal form does not match the two-parameter family");
    return rec;
}

std::array<X6Params, 3> recover_x6(UnimodEntry a, UnimodEntry b, UnimodEntry c,
                                   UnimodEntry d, const Tolerances& tol) {
    tol.validate();
    const CHMatrix target = h13(a, b, c, d, tol); // gates the h33 relations
    std::array<X6Params, 3> out{x6_params_from_h13(a, b, c, d, 0),
                                x6_params_from_h13(a, b, c, d, 1),
                                x6_params_from_h13(a, b, c, d, 2)};
    for (const X6Params& p : out) {
        const CHMatrix built = x6(p, tol);
        if (!built.entrywise_close(target, std::max(tol.eps_entry, 1e-8)))
            throw std::logic_error("cube-root branch failed to rebuild the diagonal form");
    }
    return out;
}

X6MatrixRecovery recover_x6_from_matrix(const CHMatrix& m, const Tolerances& tol) {
    tol.validate();
    require_six_by_six(m, "recover_x6_from_matrix");
    if (!is_hadamard(m, tol).ok)
        throw NotHadamard("recovery requires pairwise orthogonal rows");

    for (int pr = 0; pr < 6; ++pr)
        for (int pc = 0; pc < 6; ++pc) {
            const EquivalenceMove md = dephase_move(m, pr, pc);
            const CHMatrix n = apply_equivalence(m, md);
            const std::vector<PatternB> matchings = all_pattern_b(n, tol);
            for (const PatternB& match : matchings) {
                std::array<int, 3> slot{0, 1, 2};
                do {
                    // Pattern pair slot[t] lands on diagonal position 1+t.
                    std::array<int, 6> row_to{}, col_to{};
                    std::array<bool, 6> row_used{}, col_used{};
                    row_to[0] = 0;
                    col_to[0] = 0;
                    row_used[0] = col_used[0] = true;
                    for (int t = 0; t < 3; ++t) {
                        const int s = slot[static_cast<size_t>(t)];
                        row_to[match.rows[static_cast<size_t>(s)]] = 1 + t;
                        col_to[match.cols[static_cast<size_t>(s)]] = 1 + t;
                        row_used[match.rows[static_cast<size_t>(s)]] = true;
                        col_used[match.cols[static_cast<size_t>(s)]] = true;
                    }
                    std::vector<int> row_rest, col_rest;
                    for (int k = 0; k < 6; ++k) {
                        if (!row_used[k]) row_rest.push_back(k);
                        if (!col_used[k]) col_rest.push_back(k);
                    }
                    for (int rs = 0; rs < 2; ++rs)
                        for (int cs = 0; cs < 2; ++cs) {
                            row_to[row_rest[0]] = rs ? 5 : 4;
                            row_to[row_rest[1]] = rs ? 4 : 5;
                            col_to[col_rest[0]] = cs ? 5 : 4;
                            col_to[col_rest[1]] = cs ? 4 : 5;
                            const EquivalenceMove mp = perm_move(row_to, col_to);
                            const CHMatrix p = apply_equivalence(n, mp);
                            const UnimodEntry a = p.at(1, 2), b = p.at(1, 3);
                            const UnimodEntry c = p.at(2, 1), d = p.at(2, 3);
                            CHMatrix target(6, 6);
                            try {
                                target = h13(a, b, c, d, tol);
                            } catch (const RelationViolation&) {
                                continue;
                            }
                            if (!p.entrywise_close(target, tol.eps_entry)) continue;
                            X6MatrixRecovery rec{
                                {a, b, c, d},
                                recover_x6(a, b, c, d, tol),
                                compose(mp, md)};
                            return rec;
                        }
                } while (std::next_permutation(slot.begin(), slot.end()));
            }
        }
    throw PatternMissing("no pivot and permutation reach the 2-circulant diagonal form");
}

} // namespace hadlab
