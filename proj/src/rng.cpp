#include "upw/rng.hpp"

#include <numeric>
#include <utility>

namespace upw {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw precondition_error("below: bound must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    SplitMix64 mix(seed ^ (a * 0xd1342543de82ef95ULL) ^ (b * 0xaf251af3b0f025b5ULL));
    mix.next();
    return mix.next();
}

Permutation random_permutation(int m, SplitMix64& rng) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
    return Permutation(std::move(v));
}

}  // namespace upw
