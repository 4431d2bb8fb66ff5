#pragma once

#include <cstdint>

#include "cantorlab/bitstring.hpp"
#include "cantorlab/rational.hpp"

namespace cantorlab {

// Counter-based keyed generator (SplitMix64 finalizer over a mixed key).
// Every draw is a pure function of its key tuple, so parallel evaluation
// order cannot perturb any stream and results are identical on every
// platform. This is the only entropy source in the library; there is no
// wall-clock seeding anywhere.
namespace rng {

inline uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t combine(uint64_t a, uint64_t b) { return mix(a + 0x632be59bd9b4e019ull * mix(b)); }

// 64 pseudo-random bits keyed by (seed, a, b).
inline uint64_t draw(uint64_t seed, uint64_t a, uint64_t b) {
    return mix(combine(combine(seed, a), b));
}

// One bit keyed by (seed, index).
inline int bit(uint64_t seed, uint64_t index) {
    return static_cast<int>(draw(seed, index, 0x62697473ull) & 1u);
}

// Uniform 53-bit dyadic rational in [0, 1), keyed by (seed, a, b).
inline Rational uniform53(uint64_t seed, uint64_t a, uint64_t b) {
    uint64_t r = draw(seed, a, b) >> 11;
    return Rational(BigInt(static_cast<unsigned long>(r)), BigInt(1) << 53);
}

}  // namespace rng

}  // namespace cantorlab
