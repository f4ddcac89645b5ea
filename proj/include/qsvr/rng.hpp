#pragma once

#include <cstdint>
#include <random>

namespace qsvr {

// SplitMix64 finalizer. Used to derive well-scrambled child seeds from a
// master seed plus stream indices, so that per-entry RNG streams are
// independent of evaluation order (serial and parallel runs agree).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Child seed for stream (i, j) of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t i, std::uint64_t j) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ splitmix64(i + 1));
    s = splitmix64(s ^ splitmix64(j + 1));
    return s;
}

using ShotRng = std::mt19937_64;

// Uniform double in [0, 1) with exactly 53 random bits; identical on every
// platform for a given engine state, unlike std::generate_canonical.
inline double uniform01(ShotRng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qsvr
