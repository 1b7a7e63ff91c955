#include <doctest.h>

#include "hadlab/classify.hpp"
#include "hadlab/equivalence.hpp"

using namespace hadlab;

TEST_CASE("verdicts for the canonical members") {
    Rng rng(31);
    const CHMatrix f = f6t(rng.unimodular(), rng.unimodular());
    const ClassificationReport rf = classify(f);
    CHECK(rf.verdict == FamilyVerdict::TransposedFourier);
    REQUIRE(rf.pattern_a.has_value());
    CHECK(*rf.pattern_a == 1);
    CHECK_FALSE(rf.pattern_b.has_value());

    const CHMatrix d = d6(rng.unimodular());
    const ClassificationReport rd = classify(d);
    CHECK(rd.verdict == FamilyVerdict::TwoCirculant);
    REQUIRE(rd.pattern_b.has_value());
    CHECK(rd.pattern_b->rows == std::array<int, 3>{1, 2, 3});
    CHECK(rd.pattern_b->cols == std::array<int, 3>{1, 2, 3});

    const UnimodEntry w = cube_root_unity();
    CHECK(classify(f6t(w, w)).verdict == FamilyVerdict::Both);

    CHECK(classify(h_a(rng.unimodular())).verdict == FamilyVerdict::None);
    // a = 1 degenerates: the second row becomes [1,-1,1,-1,1,-1].
    CHECK(classify(h_a(UnimodEntry())).verdict == FamilyVerdict::TransposedFourier);
    CHECK(classify(h_a(w)).verdict == FamilyVerdict::TwoCirculant);

    const CHMatrix x = x6(sample_x6_params(rng));
    CHECK(classify(x).verdict == FamilyVerdict::TwoCirculant);

    CHECK_THROWS_AS(classify(CHMatrix(6, 6)), NotHadamard);
}

TEST_CASE("verdicts survive scrambling and pivot sweeps") {
    Rng rng(32);
    const CHMatrix f = f6t(rng.unimodular(), rng.unimodular());
    const CHMatrix fs = apply_equivalence(f, random_move(rng));
    CHECK(classify(fs).verdict == FamilyVerdict::TransposedFourier);

    const CHMatrix x = x6(sample_x6_params(rng));
    const CHMatrix xs = apply_equivalence(x, random_move(rng));
    CHECK(classify(xs).verdict == FamilyVerdict::TwoCirculant);

    const PivotSweep sweep = classify_all_pivots(xs);
    CHECK(sweep.verdicts.size() == 36);
    CHECK(sweep.consistent);
    CHECK(sweep.verdicts[0] == FamilyVerdict::TwoCirculant);

    CHECK(classify_all_pivots(d6(rng.unimodular())).consistent);
}

TEST_CASE("cancelling pairs, regularity, and the triangle criterion") {
    Rng rng(33);
    const CHMatrix f = f6t(rng.unimodular(), rng.unimodular());
    const CancellingSummary sf = cancelling_summary(f);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const bool expected = (i == 0 && j == 1) || (i == 2 && j == 3) ||
                                  (i == 4 && j == 5);
            CHECK(sf.graph[static_cast<size_t>(pair_index(i, j))] == expected);
        }
    CHECK_FALSE(sf.regular);
    CHECK_FALSE(sf.triangle.has_value());

    const CHMatrix d = d6(rng.unimodular());
    const CancellingSummary sd = cancelling_summary(d);
    CHECK(sd.regular);
    REQUIRE(sd.triangle.has_value());

    const CHMatrix x = x6(sample_x6_params(rng));
    CHECK_FALSE(cancelling_summary(x).regular);

    // The two characterizations agree pair by pair.
    for (const CHMatrix* m : {&f, &d, &x})
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                CHECK(is_cancelling_pair(*m, i, j) == partition_cancelling(*m, i, j));

    const CHMatrix r = r2(rng.unimodular());
    CHECK(is_cancelling_pair(r, 0, 1));
    CHECK(is_cancelling_pair(r, 0, 2));
    CHECK(is_cancelling_pair(r, 1, 2));

    const CHMatrix wm = w_example();
    CHECK_FALSE(is_cancelling_pair(wm, 0, 3));

    CHECK_THROWS_AS(is_cancelling_pair(CHMatrix(6, 6), 0, 1), NonOrthogonalRows);
    CHECK_THROWS_AS(is_cancelling_pair(d, 2, 2), std::invalid_argument);
}

TEST_CASE("block pairings for the structured families") {
    Rng rng(34);
    const auto kf = karlsson_blocks(f6t(rng.unimodular(), rng.unimodular()));
    REQUIRE(kf.has_value());
    CHECK(kf->row_pairs == Pairing{{{0, 1}, {2, 3}, {4, 5}}});
    CHECK(kf->col_pairs == Pairing{{{0, 3}, {1, 4}, {2, 5}}});

    const auto kd = karlsson_blocks(d6(rng.unimodular()));
    REQUIRE(kd.has_value());
    CHECK(kd->row_pairs == Pairing{{{0, 1}, {2, 3}, {4, 5}}});
    CHECK(kd->col_pairs == Pairing{{{0, 1}, {2, 3}, {4, 5}}});

    const auto kx = karlsson_blocks(x6(sample_x6_params(rng)));
    REQUIRE(kx.has_value());
    CHECK(kx->row_pairs == Pairing{{{0, 1}, {2, 4}, {3, 5}}});
    CHECK(kx->col_pairs == Pairing{{{0, 1}, {2, 4}, {3, 5}}});
}

TEST_CASE("two-parameter recovery rebuilds the normal form with a certificate") {
    Rng rng(35);
    for (int n = 0; n < 5; ++n) {
        const CHMatrix f = f6t(rng.unimodular(), rng.unimodular());
        const CHMatrix scrambled = apply_equivalence(f, random_move(rng));
        const F6TRecovery rec = recover_f6t(scrambled);
        const CHMatrix rebuilt = apply_equivalence(scrambled, rec.certificate);
        CHECK(rebuilt.entrywise_close(f6t(rec.a, rec.b), 1e-9));
    }
    // The a = 1 degeneration acquires the three-entry row and lands at (1, 1).
    const F6TRecovery deg = recover_f6t(h_a(UnimodEntry()));
    CHECK(deg.a.close_to({1.0, 0.0}, 1e-9));
    CHECK(deg.b.close_to({1.0, 0.0}, 1e-9));
    CHECK_THROWS_AS(recover_f6t(h_a(UnimodEntry::from_turns(0.23))), PatternMissing);
    CHECK_THROWS_AS(recover_f6t(x6(sample_x6_params(rng))), PatternMissing);
}

TEST_CASE("four-scalar recovery validates the relations and all cube-root branches") {
    const UnimodEntry i = imag_unit();
    const auto branches = recover_x6(i, -i, i, i);
    const CHMatrix target = h13(i, -i, i, i);
    for (const X6Params& p : branches) CHECK(x6(p).entrywise_close(target, 1e-12));
    CHECK_THROWS_AS(recover_x6(UnimodEntry(), UnimodEntry(), UnimodEntry(), UnimodEntry()),
                    RelationViolation);
}

TEST_CASE("matrix-level recovery finds a 2-circulant normal form after scrambling") {
    Rng rng(36);
    const CHMatrix x = x6(sample_x6_params(rng));
    const CHMatrix scrambled = apply_equivalence(x, random_move(rng));
    const X6MatrixRecovery rec = recover_x6_from_matrix(scrambled);
    const CHMatrix rebuilt = apply_equivalence(scrambled, rec.certificate);
    CHECK(rebuilt.entrywise_close(x6(rec.params[0]), 1e-8));
    CHECK(rebuilt.entrywise_close(
        h13(rec.abcd[0], rec.abcd[1], rec.abcd[2], rec.abcd[3]), 1e-8));

    CHECK_THROWS_AS(recover_x6_from_matrix(h_a(UnimodEntry())), PatternMissing);
}
