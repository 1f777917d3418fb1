#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "upw/containment.hpp"
#include "upw/search.hpp"
#include "upw/word.hpp"

namespace upw {

// The infinite zigzag word alternates ascending runs of the odd numbers with
// descending runs of the even numbers. It is never materialized; embeddings
// track a cursor through its runs.

/// Cursor state of the greedy leftmost embedding into the infinite zigzag
/// word: the run the last letter was matched in (odd runs ascend through the
/// odds, even runs descend through the evens) and that letter's value.
struct ZigzagCursor {
    int run_index = 0;  // 0 before the first letter
    int last_value = 0;

    void advance(int letter);
};

/// s(p): runs needed by the greedy leftmost embedding of p minus |p|.
/// Rejects the empty word.
int score(const Word& p);

/// p+1: adds 1 to each letter.
Word shift_up(const Word& p);

/// True iff p(i) = p(i+1) for some i.
bool has_immediate_repetition(const Word& p);

/// First n runs of the infinite zigzag word restricted to [n+1]; a word of
/// length (n^2+n)/2 containing every pattern of length n.
Word miller_word(int n);

/// z_n: first n runs restricted to [n]; length n^2/2 (n even) or
/// (n^2+1)/2 (n odd).
Word zigzag_word(int n);

/// zeta_n: the permutation obtained from z_n by breaking ties decreasingly.
Permutation zeta_permutation(int n);

/// Positions (a, b), 1-based, with pi(a) = pi(b) + 1 and b >= a + 2;
/// smallest a (b is then unique). Layered permutations have none.
std::optional<std::pair<int, int>> distant_inverse_descent(const Permutation& pi);

/// Decomposition of a layered permutation into its decreasing layers, with
/// the parity type (first entry, last entry) of each layer.
struct LayerDecomposition {
    enum class Type { odd_even, odd_odd, even_even, even_odd };
    std::vector<int> lengths;
    std::vector<Type> types;
};

std::optional<LayerDecomposition> layer_decomposition(const Permutation& pi);

/// pi (+) sigma: sigma's plot placed above and to the right of pi's.
Permutation direct_sum(const Permutation& pi, const Permutation& sigma);

/// The repetition-carrying word p in [n-1]^n used to route pi through z_n:
/// entries above pi(b) are decremented. Requires (a, b) to be a distant
/// inverse-descent of pi.
Word did_reduction(const Permutation& pi, int a, int b);

/// Witness of pi inside zeta_n for pi with a distant inverse-descent. The
/// returned indices are verified against order_isomorphic before returning.
ContainmentWitness embed_via_distant_inverse_descent(const Permutation& pi);

/// The surgery word for a layered pi (at least two layers) whose ultimate
/// layer has even-odd type: the score-0 word whose embedding in z_n yields
/// pi in zeta_n. Verified before returning.
Word layered_surgery(const Permutation& pi);

/// Score of a layered permutation computed by walking layer parity types;
/// always in {-1, 0, +1} and equal to score(pi).
int layered_score_walk(const Permutation& pi);

/// A permutation of length ceil((n^2+1)/2) containing every pattern of
/// length n: zeta_n for odd n, zeta_n with a new maximum prepended for even n.
Permutation universal_permutation(int n);

/// Least m for which the occurrence-counting argument over [n+1] permits a
/// universal word of length m, plus the n^2/e asymptotic reference.
struct CountingBound {
    int least_length = 0;
    double asymptotic = 0.0;  // n^2 / e
};

CountingBound counting_bound_n_plus_1(int n);

/// Exact count of patterns realizable with the given per-letter occurrence
/// multiplicities over [n+1]: sum over dropped letters of the product of the
/// remaining multiplicities. Returned as a decimal string (values grow fast).
std::string containment_capacity(const std::vector<int>& multiplicities);

/// Shortest permutation containing all patterns of length n. Exhaustive for
/// n <= 4 under default budgets; n = 5 refutation and anything above is
/// long-run (the best known construction is returned unproven instead).
SearchOutcome search_shortest_superpattern(int n, const SearchBudget& budget = {});

/// Best known universal permutation for patterns of length n; the search
/// seeds its incumbent with this.
Permutation best_known_superpattern(int n);

}  // namespace upw
