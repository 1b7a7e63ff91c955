#include <doctest.h>

#include "hadlab/laurent.hpp"

using namespace hadlab;

TEST_CASE("parsing, canonical printing, and structural equality") {
    const LaurentPoly p = LaurentPoly::parse("(a + b) * (a - b)");
    const LaurentPoly q = LaurentPoly::parse("a^2 - b^2");
    CHECK(p == q);
    CHECK(p.str() == "-b^2 + a^2");

    CHECK(LaurentPoly::parse("x - x + y").str() == "y");
    CHECK(LaurentPoly::parse("x - x").is_zero());
    CHECK(LaurentPoly::parse("x - x").str() == "0");
    CHECK(LaurentPoly::parse("0").is_zero());
    CHECK(LaurentPoly::parse("y + x").str() == "y + x");
    CHECK(LaurentPoly::parse("-3*x*y^2 + 7").str() == "7 - 3*x*y^2");
    CHECK(LaurentPoly::parse("2*x*2*y").str() == "4*x*y");

    // Coefficients are arbitrary-precision.
    const std::string big = "123456789012345678901234567890";
    CHECK(LaurentPoly::parse(big + "*z").str() == big + "*z");

    const LaurentPoly cube = LaurentPoly::parse("x + y").pow(3);
    CHECK(cube.term_count() == 4);
    CHECK(cube.str() == "y^3 + 3*x*y^2 + 3*x^2*y + x^3");
}

TEST_CASE("negative exponents make the arithmetic genuinely Laurent") {
    const LaurentPoly p = LaurentPoly::parse("x^-2 * x^3");
    CHECK(p == LaurentPoly::variable("x"));
    CHECK(LaurentPoly::parse("q*w*p^-1").str() == "p^-1*q*w");
    CHECK((LaurentPoly::variable("x", -1) * LaurentPoly::variable("x")).str() == "1");

    const LaurentPoly m = LaurentPoly::parse("3*x^2*y^-1");
    CHECK(m.pow(-1).str() == "1/3*x^-2*y");
    CHECK((m * m.pow(-1)).str() == "1");

    CHECK_THROWS_AS(LaurentPoly::parse("x + y").pow(-1), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("(x + y)^-1"), PolyParseError);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(LaurentPoly::parse("x +"), PolyParseError);
    CHECK_THROWS_AS(LaurentPoly::parse("x y"), PolyParseError);
    CHECK_THROWS_AS(LaurentPoly::parse("(x"), PolyParseError);
    CHECK_THROWS_AS(LaurentPoly::parse("x^"), PolyParseError);
    CHECK_THROWS_AS(LaurentPoly::parse("x^y"), PolyParseError);
    CHECK_THROWS_AS(LaurentPoly::parse("$"), PolyParseError);
    try {
        LaurentPoly::parse("a * $");
    } catch (const PolyParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("substitution with monomials") {
    const LaurentPoly p = LaurentPoly::parse("x^2*y + x*z");
    const LaurentPoly sub = p.substitute("x", LaurentPoly::parse("2*t^-1"));
    CHECK(sub == LaurentPoly::parse("4*t^-2*y + 2*t^-1*z"));
    CHECK(p.substitute("absent", LaurentPoly::variable("t")) == p);
    CHECK_THROWS_AS(p.substitute("x", LaurentPoly::parse("t + 1")), std::invalid_argument);
}

TEST_CASE("exact and floating evaluation") {
    const LaurentPoly p = LaurentPoly::parse("(x + y)^3");
    CHECK(p.eval({{"x", Rational(2)}, {"y", Rational(3)}}) == Rational(125));

    const LaurentPoly lp = LaurentPoly::parse("x^-2");
    CHECK(lp.eval({{"x", Rational(2, 3)}}) == Rational(9, 4));
    CHECK_THROWS_AS(lp.eval({{"x", Rational(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(p.eval({{"x", Rational(1)}}), std::invalid_argument);

    const std::complex<double> v =
        p.eval_complex({{"x", {0.0, 1.0}}, {"y", {1.0, 0.0}}});
    // (1+i)^3 = -2 + 2i
    CHECK(std::abs(v - std::complex<double>(-2.0, 2.0)) <= 1e-12);
}
