#pragma once

#include <optional>
#include <vector>

#include "upw/containment.hpp"
#include "upw/search.hpp"
#include "upw/word.hpp"

namespace upw {

/// The n cyclic rotations of a permutation, listed in rotation order (each
/// member moves its first letter to the end) starting from the
/// lexicographically least member. Classes partition the n! permutations
/// into (n-1)! classes.
struct CyclicClass {
    std::vector<Permutation> members;

    const Permutation& representative() const { return members.front(); }
    bool operator==(const CyclicClass&) const = default;
};

CyclicClass cyclic_class(const Permutation& pi);

/// The n(n-1) permutations visited from pi by sweeping a full cyclic class,
/// wasting one letter to hop to the next class, and so on through n-1
/// classes. The j-th class entered is rooted at pi with its first n-1
/// letters rotated left j times.
struct Trajectory {
    Permutation origin;
    std::vector<Permutation> visits;
};

Trajectory trajectory(const Permutation& pi);

enum class LetterTag {
    new_permutation,
    wasted_initial,
    wasted_leave_class,
    wasted_change_trajectory,
    wasted_other,
};

/// Per-letter account of a word over [n]: each position either completes a
/// first occurrence of a permutation or is wasted, with wasted letters
/// refined by their role.
struct WasteDecomposition {
    struct Position {
        LetterTag tag = LetterTag::wasted_other;
        std::optional<Permutation> completed;  // set for new_permutation
    };

    std::vector<Position> positions;
    std::size_t new_permutations = 0;
    std::size_t wasted_initial = 0;
    std::size_t wasted_leave_class = 0;
    std::size_t wasted_change_trajectory = 0;
    std::size_t wasted_other = 0;

    std::size_t wasted_total() const {
        return wasted_initial + wasted_leave_class + wasted_change_trajectory + wasted_other;
    }
};

WasteDecomposition waste_decomposition(const Word& w, int n);

/// True iff w (over [n]) contains every permutation of length n as a factor.
bool is_superpermutation(const Word& w, int n);

/// The recursive superpermutation of length 1! + 2! + ... + n!: each
/// permutation window rho of the (n-1)-superpermutation emits rho n rho, and
/// consecutive blocks are merged on their maximal overlap.
Word at_superpermutation(int n, int cap = 8);

/// Lower/upper bound values for shortest n-superpermutations. Fields are 0
/// when the formula does not apply at this n (see *_valid_from).
struct SuperpermBounds {
    int n = 1;
    long long lower_window_count = 0;      // n! + n - 1
    long long lower_cyclic_class = 0;      // n! + (n-1)! + n - 2
    long long lower_trajectory = 0;        // n! + (n-1)! + (n-2)! + n - 3, n >= 2
    long long lower_trajectory_plus_one = 0;  // previous + 1, n >= 5 (see notes)
    long long upper_recursive = 0;         // 1! + ... + n!
    long long upper_egan = 0;              // n! + (n-1)! + (n-2)! + (n-3)! + n - 3, n >= 4
    std::optional<long long> exact;        // known shortest length (n <= 5)
    std::optional<long long> record_upper; // best known construction beating the formulas
};

SuperpermBounds superperm_bounds(int n);

/// Exact shortest n-superpermutation search (iterative deepening start at
/// the trajectory lower bound, first-appearance symmetry breaking, waste
/// accounting pruning). Exhaustive for n <= 4; n = 5 requires long_run, and
/// otherwise the recursive construction is returned unproven.
SearchOutcome search_shortest_superperm(int n, const SearchBudget& budget = {});

}  // namespace upw
