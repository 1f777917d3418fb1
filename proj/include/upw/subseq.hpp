#pragma once

#include <optional>
#include <vector>

#include "upw/search.hpp"
#include "upw/word.hpp"

namespace upw {

/// True iff w (over [n]) contains all n! permutations as subsequences. Over
/// the alphabet [n], pattern containment of a length-n permutation is
/// literal containment, so matching is greedy per letter.
bool is_subseq_universal_restricted(const Word& w, int n);

/// The adversarially hard permutation for w: each step picks the unused
/// symbol whose earliest occurrence after the current position is latest
/// (ties to the smallest symbol; a symbol with no occurrence left wins and
/// ends the construction as "not contained").
struct AdversaryResult {
    Word chosen;                      // the symbols picked, in order
    std::vector<int> match_positions; // 1-based greedy match of each step
    bool contained = false;
    int end_index = 0;                // last match position when contained
};

AdversaryResult greedy_adversary(const Word& w, int n);

/// Bound values for shortest subsequence-universal words over [n].
struct RestrictedBounds {
    int n = 1;
    std::optional<long long> exact;          // Newey's values, n <= 7
    long long lower_adversary = 0;           // (n^2 + n) / 2
    long long upper_quadratic = 0;           // n^2 - 2n + 4, n >= 3
    long long upper_quadratic_minus_one = 0; // n^2 - 2n + 3, n >= 10
    long long upper_radomirovic = 0;         // ceil(n^2 - 7n/3 + 19/3), n >= 7
    bool asymptotic_n_squared = true;        // known asymptotics, not computable here
};

RestrictedBounds restricted_bounds(int n);

/// Exact shortest-length search: words over [n], iterating target length
/// upward from (n^2+n)/2 with first-appearance symmetry breaking and
/// adversary-based pruning. Exhaustive for n <= 4; n = 5 requires long_run
/// (a trivial n^2 construction is returned unproven otherwise).
SearchOutcome search_shortest_restricted(int n, const SearchBudget& budget = {});

}  // namespace upw
