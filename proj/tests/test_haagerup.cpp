#include <doctest.h>

#include <algorithm>

#include "hadlab/families.hpp"
#include "hadlab/haagerup.hpp"

using namespace hadlab;
using cplx = std::complex<double>;

TEST_CASE("the vanishing expression on the non-completable 4x6 example") {
    const CHMatrix w = w_example();
    const std::array<int, 3> rows{0, 1, 2};
    const std::array<int, 4> cols{0, 1, 2, 3};

    // Direct orientation: the first three rows extend, so the expression dies.
    CHECK(std::abs(haagerup_bracket(w, rows, cols)) <= 1e-12);

    // Transposed orientation: the obstruction shows up.
    const cplx bare = haagerup_bracket(w, rows, cols, true);
    CHECK(std::abs(bare - cplx(0.0, 4.0 / 3.0)) <= 1e-12);

    const cplx full = haagerup_full(w, rows, cols, true);
    const cplx gold = -4.0 * cplx(2.0 * std::sqrt(2.0), 1.0) / 9.0;
    CHECK(std::abs(full - gold) <= 1e-12);

    // The cleared form is the bare value times the product of the twelve
    // participating entries.
    cplx prod = 1.0;
    for (int r : rows)
        for (int c : cols) prod *= w.value(c, r);
    CHECK(std::abs(full - bare * prod) <= 1e-12);
}

TEST_CASE("selection validation") {
    const CHMatrix w = w_example();
    CHECK_THROWS_AS(haagerup_bracket(w, {0, 0, 1}, {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(haagerup_bracket(w, {0, 1, 2}, {0, 1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(haagerup_bracket(w, {0, 1, 4}, {0, 1, 2, 3}), std::out_of_range);
    CHECK_THROWS_AS(haagerup_bracket(w, {0, 1, 2}, {0, 1, 2, 4}, true), std::out_of_range);
    CHECK_NOTHROW(haagerup_bracket(w, {0, 1, 5}, {0, 1, 2, 3}, true));
}

TEST_CASE("scans vanish on members and explode on random grids") {
    Rng rng(61);
    CHECK(haagerup_scan(f6t(rng.unimodular(), rng.unimodular())).max_abs <= 1e-10);
    CHECK(haagerup_scan(d6(rng.unimodular())).max_abs <= 1e-10);
    CHECK(haagerup_scan(x6(sample_x6_params(rng))).max_abs <= 1e-10);

    CHMatrix random(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) random.at(i, j) = rng.unimodular();
    CHECK(haagerup_scan(random).max_abs > 0.1);

    // Completing the non-extendable 4x6 rows with unimodular filler does not
    // hide the obstruction: the scan stays far from zero.
    CHMatrix padded(6, 6);
    const CHMatrix w = w_example();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j) padded.at(i, j) = w.at(i, j);
    CHECK(haagerup_scan(padded).max_abs >= 0.5);

    CHECK_THROWS_AS(haagerup_scan(w_example()), std::invalid_argument);
}

TEST_CASE("cross-ratio fingerprints separate the families") {
    const CHMatrix d1 = d6(UnimodEntry());
    const auto fp1 = haagerup_fingerprint(d1);
    const std::vector<cplx> expected{{-1.0, 0.0}, {0.0, -1.0}, {0.0, 1.0}, {1.0, 0.0}};
    REQUIRE(fp1.size() == 4);
    for (size_t k = 0; k < 4; ++k) CHECK(std::abs(fp1[k] - expected[k]) <= 1e-9);

    const UnimodEntry generic = UnimodEntry::from_complex(std::polar(1.0, 0.3));
    const auto fpd = haagerup_fingerprint(d6(generic));
    CHECK(fpd.size() == 12);

    const auto fpf = haagerup_fingerprint(
        f6t(UnimodEntry::from_turns(0.3), UnimodEntry::from_turns(0.77)));
    CHECK(fpf.size() == 40);
    CHECK(fpf != fpd);

    // Swapping the two row indices conjugates a cross-ratio, so the set is
    // closed under conjugation.
    auto conj_member = [&](const cplx& v) {
        return std::any_of(fpf.begin(), fpf.end(),
                           [&](const cplx& u) { return std::abs(u - std::conj(v)) <= 1e-7; });
    };
    CHECK(std::all_of(fpf.begin(), fpf.end(), conj_member));

    Rng rng(62);

    const UnimodEntry q = rng.unimodular();
    CHECK(haagerup_fingerprint(r1(q)) != haagerup_fingerprint(r2(q)));
}
