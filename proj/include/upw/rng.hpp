#pragma once

#include <cstdint>

#include "upw/word.hpp"

namespace upw {

/// splitmix64. The generator identity is part of the external contract:
/// seeded results must reproduce across platforms and worker counts, so all
/// sampling goes through this fixed algorithm rather than <random> engines.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Unbiased integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);
};

/// Derives an independent substream key from (seed, a, b). Each sample of a
/// sampling run uses its own substream, which makes results independent of
/// the worker count.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// Uniform random permutation of length m via Fisher-Yates.
Permutation random_permutation(int m, SplitMix64& rng);

}  // namespace upw
