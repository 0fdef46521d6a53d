#pragma once

// Seed derivation and bounded draws for the randomized suites. Per-trial
// seeds come from a single master seed, so results do not depend on how
// trials are split across workers. Bounded draws avoid
// std::uniform_int_distribution, whose output is implementation-defined.

#include <cstdint>
#include <random>

namespace ringcode {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

/// Unbiased draw from [0, bound) via rejection sampling. bound must be > 0.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

}  // namespace ringcode
