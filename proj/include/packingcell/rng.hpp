#pragma once

#include <cstdint>

namespace packingcell {

// splitmix64 (Steele/Lea/Flood). Used in counter mode: draw k of stream
// `seed` is mix(seed + (k+1)*GAMMA), so any block of draws can be produced
// independently and parallel evaluation is bit-identical to serial.
inline std::uint64_t splitmix64_draw(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(splitmix64_draw(seed, index) >> 11) * 0x1.0p-53;
}

}  // namespace packingcell
