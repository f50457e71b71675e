#pragma once

#include <cstdint>
#include <random>

namespace pspi {

// Deterministic helpers on top of std::mt19937_64. The standard
// distributions are implementation-defined, so everything that must be
// reproducible bit-for-bit goes through these instead.

/// Uniform double in [0, 1) using the top 53 bits of one engine draw.
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, bound) via rejection sampling.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// splitmix64 finalizer; used to derive independent seed streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace pspi
