#pragma once

#include <cstdint>
#include <random>

#include "hadlab/unimod.hpp"

namespace hadlab {

// Deterministic random source. Uniform doubles are derived from the raw
// 64-bit stream by a fixed bit recipe (not std::uniform_real_distribution)
// so that seeded output is identical across standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform in [0,1) with 53 random bits.
    double turns() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    UnimodEntry unimodular() { return UnimodEntry::from_turns(turns()); }

    int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 eng_;
};

} // namespace hadlab
