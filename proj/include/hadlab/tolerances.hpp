#pragma once

#include <stdexcept>

namespace hadlab {

struct Tolerances {
    double eps_orth = 1e-9;    // row inner-product residual bound
    double eps_unimod = 1e-12; // |modulus^2 - 1| bound for stored entries
    double eps_entry = 1e-9;   // entrywise equality and -1 detection

    void validate() const {
        if (!(eps_orth > 0.0 && eps_unimod > 0.0 && eps_entry > 0.0))
            throw std::invalid_argument("tolerances must be strictly positive");
        if (!(eps_unimod <= eps_entry && eps_entry <= eps_orth * 10.0))
            throw std::invalid_argument(
                "tolerances must satisfy eps_unimod <= eps_entry <= 10*eps_orth");
    }
};

} // namespace hadlab
