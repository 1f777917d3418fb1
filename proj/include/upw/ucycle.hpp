#pragma once

#include <optional>

#include "upw/bigint.hpp"
#include "upw/word.hpp"

namespace upw {

/// A nonempty word read cyclically. Rotations are equivalent as cycles, but
/// the stored starting rotation is preserved through serialization.
struct CyclicWord {
    Word word;

    explicit CyclicWord(Word w) : word(std::move(w)) {
        if (word.empty()) throw precondition_error("cyclic word must be nonempty");
    }

    std::size_t size() const { return word.size(); }
    CyclicWord rotated(std::size_t k) const;
    bool operator==(const CyclicWord&) const = default;
};

/// True iff w has length k^n and every word of [k]^n occurs exactly once as
/// a cyclic factor. Letters must lie in [k].
bool is_debruijn(const CyclicWord& w, int n, int k);

/// Deterministic de Bruijn word of order n over [k]: Eulerian circuit of the
/// order-(n-1) transition graph, always taking the smallest unused letter.
CyclicWord generate_debruijn(int n, int k, std::uint64_t size_cap = 1u << 20);

/// Exact number of de Bruijn cycles: (k!)^(k^(n-1)) / k^n.
bigint debruijn_count(int n, int k);

/// True iff w has length n! and every permutation of length n is
/// order-isomorphic to exactly one cyclic factor (both counts checked).
bool is_perm_ucycle(const CyclicWord& w, int n);

/// Linearization w(1)..w(n!) w(1)..w(n-1) of a permutation ucycle: a
/// shortest universal word for factors, of length n! + n - 1.
Word ucycle_to_word(const CyclicWord& w, int n);

/// Exhaustive backtracking search for a permutation ucycle of length n! over
/// [alphabet_size]; nullopt is a proof of nonexistence (the first window is
/// normalized to be strictly increasing, which any ucycle can be rotated
/// into). Requires n <= 5 and alphabet_size >= n. A node cap of 0 means
/// unbounded; exceeding it raises budget_exhausted.
std::optional<CyclicWord> search_perm_ucycle(int n, int alphabet_size,
                                             std::uint64_t node_cap = 0);

}  // namespace upw
