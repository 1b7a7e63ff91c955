#pragma once

#include <cmath>
#include <complex>

#include "hadlab/errors.hpp"

namespace hadlab {

// A unit-modulus complex scalar. Construction normalizes the modulus away,
// so products and quotients of entries do not accumulate drift.
struct UnimodEntry {
    double re = 1.0;
    double im = 0.0;

    UnimodEntry() = default;

    UnimodEntry(double re_, double im_) {
        const double m = std::hypot(re_, im_);
        if (std::abs(m - 1.0) > 1e-3)
            throw DomainError("entry modulus deviates from 1 beyond repair: |z| = " +
                              std::to_string(m));
        re = re_ / m;
        im = im_ / m;
    }

    static UnimodEntry from_turns(double t) {
        t -= std::floor(t);
        UnimodEntry e;
        e.re = std::cos(2.0 * M_PI * t);
        e.im = std::sin(2.0 * M_PI * t);
        return e;
    }

    static UnimodEntry from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }

    std::complex<double> value() const { return {re, im}; }

    UnimodEntry conj() const {
        UnimodEntry e;
        e.re = re;
        e.im = -im;
        return e;
    }

    UnimodEntry operator-() const {
        UnimodEntry e;
        e.re = -re;
        e.im = -im;
        return e;
    }

    UnimodEntry operator*(const UnimodEntry& o) const {
        return from_complex(value() * o.value());
    }

    // Division by a unimodular value is multiplication by its conjugate.
    UnimodEntry operator/(const UnimodEntry& o) const {
        return from_complex(value() * o.conj().value());
    }

    bool close_to(std::complex<double> z, double eps) const {
        return std::abs(value() - z) <= eps;
    }
};

inline UnimodEntry minus_one() {
    UnimodEntry e;
    e.re = -1.0;
    e.im = 0.0;
    return e;
}

inline UnimodEntry imag_unit() {
    UnimodEntry e;
    e.re = 0.0;
    e.im = 1.0;
    return e;
}

} // namespace hadlab
