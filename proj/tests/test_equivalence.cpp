#include <doctest.h>

#include "hadlab/equivalence.hpp"
#include "hadlab/families.hpp"

using namespace hadlab;

TEST_CASE("move algebra: compose, inverse, and dephase agree with application") {
    Rng rng(101);
    const CHMatrix m = f6t(rng.unimodular(), rng.unimodular());

    const EquivalenceMove g = random_move(rng);
    const EquivalenceMove h = random_move(rng);
    const CHMatrix lhs = apply_equivalence(apply_equivalence(m, g), h);
    const CHMatrix rhs = apply_equivalence(m, compose(h, g));
    CHECK(lhs.entrywise_close(rhs, 1e-12));

    const CHMatrix round = apply_equivalence(apply_equivalence(m, g), inverse(g));
    CHECK(round.entrywise_close(m, 1e-12));

    const EquivalenceMove dm = dephase_move(m, 3, 2);
    CHECK(apply_equivalence(m, dm).entrywise_close(dephase(m, 3, 2), 1e-12));
}

TEST_CASE("equivalence holds between a matrix and any scrambling of it") {
    Rng rng(202);
    const CHMatrix m = d6(rng.unimodular());
    const CHMatrix scrambled = apply_equivalence(m, random_move(rng));
    const EquivalenceResult res = are_equivalent(m, scrambled);
    CHECK(res.equivalent);
    REQUIRE(res.witness.has_value());
    CHECK(apply_equivalence(m, *res.witness).entrywise_close(scrambled, 1e-8));
}

TEST_CASE("equivalence distinguishes structurally different members") {
    Rng rng(303);
    const CHMatrix f = f6t(rng.unimodular(), rng.unimodular());
    const CHMatrix d = d6(rng.unimodular());
    CHECK_FALSE(are_equivalent(f, d).equivalent);
}

TEST_CASE("equivalence requires Hadamard inputs") {
    CHMatrix ones(6, 6);
    const CHMatrix d = d6(UnimodEntry::from_turns(0.2));
    CHECK_THROWS_AS(are_equivalent(ones, d), NotHadamard);
    CHECK_THROWS_AS(are_equivalent(d, ones), NotHadamard);
}

TEST_CASE("self-equivalence with the identity move") {
    const CHMatrix d = d6(imag_unit());
    const EquivalenceResult res = are_equivalent(d, d);
    CHECK(res.equivalent);
}
