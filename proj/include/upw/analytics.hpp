#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "upw/bigint.hpp"
#include "upw/word.hpp"

namespace upw {

/// Number of permutations of length m (m >= 5) containing every pattern of
/// length 3, by the closed Simion-Schmidt formula.
bigint simion_schmidt_count(int m);

/// Least m with C(m, n) >= n!; no universal permutation for patterns of
/// length n can be shorter.
int arratia_min_length(int n);

/// Estimated (or exactly enumerated) share of length-m permutations that
/// contain every pattern of length n.
struct ProportionEstimate {
    int n = 0;
    int m = 0;
    std::uint64_t samples = 0;  // equals m! when exact
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
    double proportion = 0.0;
    bool exact = false;
};

/// Default cutoff below which the proportion is enumerated exactly (10!).
inline constexpr std::uint64_t default_exact_cap = 3'628'800;

/// Deterministic given (n, m, samples, seed), independent of worker count:
/// sample i draws from the splitmix64 substream keyed by (seed, m, i).
/// Enumerated exactly instead whenever m! <= exact_cap.
ProportionEstimate estimate_universal_proportion(int n, int m, std::uint64_t samples,
                                                 std::uint64_t seed,
                                                 std::uint64_t exact_cap = default_exact_cap);

/// Single-threaded reference implementation (identical results).
ProportionEstimate estimate_universal_proportion_serial(int n, int m, std::uint64_t samples,
                                                        std::uint64_t seed,
                                                        std::uint64_t exact_cap = default_exact_cap);

/// t(n): least m whose estimated proportion reaches 1/2. Alon's conjectured
/// asymptotic n^2/4 is reported alongside by the CLI, never asserted.
int t_threshold(int n, std::uint64_t samples, std::uint64_t seed,
                std::uint64_t exact_cap = default_exact_cap);

/// Rosary check: every permutation of length n occurs as a subsequence of
/// some rotation-linearization of w (also of the reversed word when
/// bidirectional). Each occurrence must live inside a single directed
/// linearization. Letters must lie in [n].
bool is_rosary(const Word& w, int n, bool bidirectional);

/// Small exact rational, printed "a" or "a/b".
struct Rational {
    long long num = 0;
    long long den = 1;
    std::string str() const;
};

/// Gupta's conjectured rosary length bounds (n^2/2, 3n^2/8 + 1/2).
std::pair<Rational, Rational> gupta_bounds(int n);

/// Exact shortest length of a word containing every layered pattern of
/// length n: a(n) = (n+1) ceil(lg(n+1)) - 2^ceil(lg(n+1)) + 1, a(0) = 0.
long long layered_universal_length(long long n);

}  // namespace upw
