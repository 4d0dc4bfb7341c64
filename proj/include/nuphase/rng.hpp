#pragma once

#include <cstdint>

namespace nuphase {

/// Stateless counter-based generator: every draw is a hash of
/// (seed, stream, counter), so results do not depend on evaluation order or
/// thread count. Mixing is the splitmix64 finalizer applied twice.
namespace rng {

inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return mix(mix(seed ^ mix(stream)) ^ counter);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return static_cast<double>(at(seed, stream, counter) >> 11) * 0x1.0p-53;
}

} // namespace rng

} // namespace nuphase
