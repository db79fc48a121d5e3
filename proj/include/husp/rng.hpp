#pragma once

#include <cmath>
#include <cstdint>

namespace husp {

// splitmix64: the 64-bit mixing generator of Steele, Lea and Flood. Chosen
// because it is trivially portable: the stream for a given seed is a pure
// function of three shift-xor-multiply rounds on a Weyl sequence.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Plain modulo: the bias is 2^-64-ish for the small
    // ranges used here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace husp
