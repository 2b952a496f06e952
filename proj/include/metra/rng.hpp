#pragma once

#include <cstdint>
#include <random>

namespace metra {

/// All stochastic operations draw from std::mt19937_64 (bit-exact across
/// platforms per the standard). Derived streams (one per Monte Carlo trial
/// or sampled subset) come from a splitmix64 walk of the master seed, so a
/// single seed pins every random choice.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 seeded_engine(uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace metra
