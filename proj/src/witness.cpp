#include "hadlab/witness.hpp"

#include "hadlab/symbolic.hpp"

namespace hadlab {

namespace {

WitnessReport report_from(const std::vector<LaurentPoly>& summands, const LaurentPoly& rhs) {
    LaurentPoly lhs;
    WitnessReport rep;
    for (const LaurentPoly& s : summands) {
        rep.component_terms.push_back(s.term_count());
        lhs = lhs + s;
    }
    const LaurentPoly diff = lhs - rhs;
    rep.holds = diff.is_zero();
    rep.residual_terms = diff.term_count();
    rep.residual = diff.str();
    return rep;
}

} // namespace

WitnessReport witness_check_l62() {
    const SymbolicMatrix m = SymbolicMatrix::from_strings({
        {"1", "1", "1", "1"},
        {"1", "-1", "1", "-1"},
        {"1", "b", "p", "q"},
        {"1", "-b", "w", "-q*w*p^-1"},
    });
    const std::array<int, 3> r012{0, 1, 2};
    const std::array<int, 3> r013{0, 1, 3};
    const std::array<int, 4> cols{0, 1, 2, 3};

    const LaurentPoly p1 = build_haagerup(m, r012, cols).full;
    const LaurentPoly p2 = LaurentPoly::parse("p^2") * build_haagerup(m, r013, cols).full;
    const LaurentPoly p3 = build_haagerup(m.transposed(), r012, cols).full;
    const LaurentPoly p4 = LaurentPoly::parse("u*b*p*q*w + 1");

    const LaurentPoly q1 = LaurentPoly::parse("-b*u*w + q*u*w^4");
    const LaurentPoly q2 = LaurentPoly::parse("-p*q*u*w - b^2*q*u^2*w");
    const LaurentPoly q3 = LaurentPoly::parse(
        "-2*q*u*w + p*q*u*w - q*u*w^2 - p*q^3*u^2*w^2 + q^3*u^2*w^3 - 2*p*q^3*u^2*w^3");
    const LaurentPoly q4 = LaurentPoly::parse(
        "8*b + 8*b*w - 8*q*w + 2*b^3*p*u*w + 2*b^2*q*u*w + 2*b*p*q^2*u*w + 8*b*w^2"
        " - 8*q*w^2 + 4*b^2*q*u*w^2 + 8*b*p*q^2*u*w^2 + 2*b*p^2*q^2*u*w^2 - 8*q*w^3"
        " + 2*b^2*q*u*w^3 + 8*b*p*q^2*u*w^3 + 4*b*p^2*q^2*u*w^3 - 2*b*q^2*u*w^4"
        " + 4*b*p*q^2*u*w^4");

    const LaurentPoly rhs = LaurentPoly::parse("8*(b - q*w)*(1 + w + w^2)");
    return report_from({p1 * q1, p2 * q2, p3 * q3, p4 * q4}, rhs);
}

WitnessReport witness_check_p63() {
    const LaurentPoly a = LaurentPoly::parse("-b*q*u*(1 + w + w^2)");
    const LaurentPoly b = LaurentPoly::parse("u*w*(b^2 + b*q + q^2)");
    const LaurentPoly c = LaurentPoly::parse("(q - b*w)*(u*(b - q*w) + 1)");
    const LaurentPoly rhs = LaurentPoly::parse("q - b*w");
    return report_from({a, b, c}, rhs);
}

} // namespace hadlab
