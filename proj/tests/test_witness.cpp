#include <doctest.h>

#include "hadlab/symbolic.hpp"
#include "hadlab/witness.hpp"

using namespace hadlab;

TEST_CASE("symbolic matrices accept signed monomials only") {
    CHECK_NOTHROW(SymbolicMatrix::from_strings({{"1", "-q*w*p^-1"}, {"a", "-1"}}));
    CHECK_THROWS_AS(SymbolicMatrix::from_strings({{"1", "a + b"}}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicMatrix::from_strings({{"1", "2"}, {"3"}}), std::invalid_argument);
}

TEST_CASE("formal row orthogonality on toy matrices") {
    const SymbolicMatrix good = SymbolicMatrix::from_strings({{"1", "1"}, {"1", "-1"}});
    CHECK(build_ort(good, 0, 1).is_zero());
    CHECK(build_ort(good, 1, 0).is_zero());

    const SymbolicMatrix bad = SymbolicMatrix::from_strings({{"1", "1"}, {"q", "q"}});
    CHECK(build_ort(bad, 0, 1) == LaurentPoly::parse("2*q"));
}

TEST_CASE("the cancelling product vanishes exactly when a term pair cancels") {
    const SymbolicMatrix rows = SymbolicMatrix::from_strings({
        {"1", "1", "1", "1", "1", "1"},
        {"1", "-1", "q", "-q", "s", "-s"},
        {"1", "q", "q^2", "s", "q*s", "q^2*s"},
    });
    CHECK(build_cancel(rows, 0, 1).is_zero());
    CHECK_FALSE(build_cancel(rows, 0, 2).is_zero());
}

TEST_CASE("the first bundled identity holds with exact coefficients") {
    const WitnessReport rep = witness_check_l62();
    CHECK(rep.holds);
    CHECK(rep.residual_terms == 0);
    CHECK(rep.residual == "0");
    REQUIRE(rep.component_terms.size() == 4);
    for (std::size_t t : rep.component_terms) CHECK(t > 0);
}

TEST_CASE("the second bundled identity holds with exact coefficients") {
    const WitnessReport rep = witness_check_p63();
    CHECK(rep.holds);
    CHECK(rep.residual_terms == 0);
    CHECK(rep.residual == "0");
    REQUIRE(rep.component_terms.size() == 3);
}
