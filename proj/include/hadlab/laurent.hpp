#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hadlab {

using Rational = boost::multiprecision::cpp_rational;

struct PolyParseError : std::runtime_error {
    std::size_t position;

    PolyParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Multivariate Laurent polynomial with exact rational coefficients. Terms are
// kept in a canonical map keyed by exponent vectors over the sorted variable
// list; variables that no longer occur are dropped, so structurally equal
// polynomials compare equal regardless of how they were built.
class LaurentPoly {
public:
    LaurentPoly() = default; // zero
    explicit LaurentPoly(Rational constant);
    explicit LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

    static LaurentPoly variable(const std::string& name, std::int32_t exponent = 1);

    // Grammar: sum of '*'-separated factors, each an integer, a variable, or
    // a parenthesized subexpression, optionally raised via '^' to a (possibly
    // negative) integer. A negative exponent requires a one-term base.
    static LaurentPoly parse(const std::string& text);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Negative exponents require a single-term polynomial with invertible
    // coefficient; throws std::invalid_argument otherwise.
    LaurentPoly pow(std::int32_t exponent) const;

    // Replaces a variable by a one-term polynomial (monomial).
    LaurentPoly substitute(const std::string& var, const LaurentPoly& monomial) const;

    // Every variable of the polynomial must be present in the assignment.
    Rational eval(const std::map<std::string, Rational>& assignment) const;
    std::complex<double> eval_complex(
        const std::map<std::string, std::complex<double>>& assignment) const;

    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    const std::vector<std::string>& vars() const { return vars_; }

    std::string str() const;

private:
    std::vector<std::string> vars_; // sorted, unique
    std::map<std::vector<std::int32_t>, Rational> terms_;

    void prune();
    LaurentPoly remapped_to(const std::vector<std::string>& target_vars) const;
    friend class PolyParser;
};

} // namespace hadlab
