#pragma once

#include <cmath>
#include <cstdint>

#include "paraph/angle.hpp"

namespace paraph {

// Counter-based hashing RNG. Every random draw is a pure function of the
// coordinates that identify it, so per-pixel streams are reproducible
// regardless of evaluation order and safe to generate in parallel.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stream tags keep independent uses of the same (seed, x, y) decorrelated.
enum class RngStream : uint64_t {
    ReadNoise = 0x1,
    MatteOrientation = 0x2,
    MatteDop = 0x3,
    Texture = 0x4,
};

inline uint64_t pixel_hash(uint64_t seed, RngStream stream, uint64_t a, uint64_t b, uint64_t c = 0) {
    uint64_t h = splitmix64(seed ^ static_cast<uint64_t>(stream) * 0x9e3779b97f4a7c15ull);
    h = splitmix64(h ^ (a * 0x100000001b3ull));
    h = splitmix64(h ^ (b * 0xc2b2ae3d27d4eb4full));
    h = splitmix64(h ^ c);
    return h;
}

// Uniform double in (0, 1] from 53 high bits (never exactly zero, so it is
// safe inside a logarithm).
inline double to_unit(uint64_t h) {
    return (static_cast<double>(h >> 11) + 1.0) * 0x1p-53;
}

// One standard normal draw per hash via Box-Muller.
inline double gaussian_from_hash(uint64_t h) {
    double u1 = to_unit(h);
    double u2 = to_unit(splitmix64(h));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace paraph
