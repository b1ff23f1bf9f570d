#pragma once

#include <cstdint>

// Deterministic, platform-independent random streams. All stochastic paths
// in the library derive their bits from these; nothing uses unseeded or
// implementation-defined distributions, so identical seeds give identical
// results on every platform.

namespace pgq {

struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Stable mixing of (seed, a, b) into one stream seed.
inline std::uint64_t stable_hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    SplitMix64 s{seed};
    std::uint64_t h = s.next();
    s.state = h ^ a;
    h = s.next();
    s.state = h ^ b;
    return s.next();
}

}  // namespace pgq
