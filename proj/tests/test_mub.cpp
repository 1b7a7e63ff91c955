#include <doctest.h>

#include "hadlab/families.hpp"
#include "hadlab/mub.hpp"

using namespace hadlab;

TEST_CASE("basis validation") {
    CHECK_NOTHROW(make_basis(DenseMatrix::identity()));
    DenseMatrix junk;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) junk.at(i, j) = 1.0;
    CHECK_THROWS_AS(make_basis(junk), DomainError);

    Rng rng(41);
    const CHMatrix f = f6t(rng.unimodular(), rng.unimodular());
    const Basis b = make_basis(basis_from_hadamard(f));
    CHECK(b.residual <= 1e-12);
}

TEST_CASE("the computational basis is unbiased to any rescaled Hadamard matrix") {
    Rng rng(42);
    const Basis id = make_basis(DenseMatrix::identity());
    const CHMatrix f = f6t(rng.unimodular(), rng.unimodular());
    const Basis bf = make_basis(basis_from_hadamard(f));

    const UnbiasedCheck ub = is_unbiased_pair(id, bf);
    CHECK(ub.unbiased);
    CHECK(ub.max_deviation <= 1e-12);

    // The transition matrix recovers the Hadamard matrix itself.
    const CHMatrix t = transition(id, bf);
    CHECK(t.entrywise_close(f, 1e-12));

    const UnbiasedCheck self = is_unbiased_pair(id, id);
    CHECK_FALSE(self.unbiased);
    CHECK_THROWS_AS(transition(id, id), NotUnbiased);
}

TEST_CASE("triplet audit reports per-pair verdicts and overall compatibility") {
    Rng rng(43);
    const Basis id = make_basis(DenseMatrix::identity());
    const Basis bf =
        make_basis(basis_from_hadamard(f6t(rng.unimodular(), rng.unimodular())));
    const Basis bx = make_basis(basis_from_hadamard(x6(sample_x6_params(rng))));

    const MubAuditReport rep = audit_triplet(id, bf, bx);
    CHECK(rep.pairs[0].unbiased);
    REQUIRE(rep.pairs[0].verdict.has_value());
    CHECK(*rep.pairs[0].verdict == FamilyVerdict::TransposedFourier);
    CHECK(rep.pairs[1].unbiased);
    REQUIRE(rep.pairs[1].verdict.has_value());
    CHECK(*rep.pairs[1].verdict == FamilyVerdict::TwoCirculant);
    // Two generic members are not unbiased to each other, so the triplet
    // cannot close up.
    CHECK_FALSE(rep.pairs[2].unbiased);
    CHECK_FALSE(rep.zauner_compatible);
}
