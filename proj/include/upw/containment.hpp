#pragma once

#include <optional>
#include <vector>

#include "upw/word.hpp"

namespace upw {

enum class ContainmentMode { factor, subsequence };

/// Indices (1-based, strictly increasing) into a host word certifying an
/// occurrence of a pattern. Factor witnesses use consecutive indices.
struct ContainmentWitness {
    ContainmentMode mode = ContainmentMode::subsequence;
    std::vector<int> indices;
};

/// Leftmost window of the host order-isomorphic to the pattern.
std::optional<ContainmentWitness> contains_factor(const Word& host, const Permutation& pattern);

/// Lexicographically least index sequence whose letters are order-isomorphic
/// to the pattern. Exact backtracking; intended for patterns of length <= 10.
std::optional<ContainmentWitness> contains_pattern(const Word& host, const Permutation& pattern);

/// Extract host letters at witness indices.
Word extract(const Word& host, const ContainmentWitness& witness);

/// The permutations of length n not contained in the host under the given
/// mode, in lexicographic order. Empty result means the host is universal.
/// Runs the per-pattern scan in parallel for subsequence mode.
std::vector<Permutation> missing_patterns(const Word& host, int n, ContainmentMode mode);

/// Single-threaded reference implementation of missing_patterns.
std::vector<Permutation> missing_patterns_serial(const Word& host, int n, ContainmentMode mode);

/// True iff missing_patterns(host, n, mode) would be empty. Bails out at the
/// first missing pattern.
bool is_universal(const Word& host, int n, ContainmentMode mode);
bool is_universal_serial(const Word& host, int n, ContainmentMode mode);

/// Largest pattern length accepted by the batch drivers above.
inline constexpr int max_pattern_length = 10;

}  // namespace upw
