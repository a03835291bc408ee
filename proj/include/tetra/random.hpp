#pragma once

// Seeded sampling helpers. Doubles are built directly from generator bits so
// that streams are reproducible across standard library implementations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace tetra {

/// Uniform in [0, 1).
inline double random_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double random_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * random_unit(rng);
}

inline bool random_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

inline std::complex<double> random_unimodular(std::mt19937_64& rng) {
    return std::polar(1.0, 2.0 * std::numbers::pi * random_unit(rng));
}

/// Uniform (by area) in the open disc of the given radius.
inline std::complex<double> random_in_disc(std::mt19937_64& rng, double radius) {
    const double r = radius * std::sqrt(random_unit(rng));
    return std::polar(r, 2.0 * std::numbers::pi * random_unit(rng));
}

/// Independent per-sample seed, so that sample i does not depend on how many
/// draws samples 0..i-1 consumed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace tetra
