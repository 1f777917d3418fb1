#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace upw {

/// Raised when text input cannot be parsed into a word.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition is violated.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a search gives up because its node or time budget ran out
/// and no result can be reported.
struct budget_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite sequence of positive integer letters. The empty word is allowed.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// 0-based access.
    int operator[](std::size_t i) const { return letters_[i]; }

    /// Largest letter, 0 for the empty word.
    int max_letter() const;

    const std::vector<int>& letters() const { return letters_; }
    std::span<const int> view() const { return letters_; }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
};

/// A word of length n using each letter of {1..n} exactly once.
/// Invalid input is rejected on construction, never normalized.
class Permutation {
public:
    Permutation() = default;  // the empty permutation
    explicit Permutation(Word w);
    explicit Permutation(std::vector<int> letters) : Permutation(Word(std::move(letters))) {}

    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    int operator[](std::size_t i) const { return word_[i]; }
    const Word& word() const { return word_; }

    /// 0-based position of a value in {1..n}.
    std::size_t position_of(int value) const;

    static Permutation identity(int n);

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    Word word_;
};

// --- text format -----------------------------------------------------------
//
// Canonical form: decimal letters separated by single spaces. Commas are
// accepted as separators too. A separator-free digit string of length >= 2
// whose digits are all nonzero is read in compact form, one letter per digit
// ("123121321"); if it contains a zero digit it is read as one decimal
// letter ("10" is the single letter ten).

Word parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);

/// Canonical whitespace form; round-trips bit-exactly through parse_word.
std::string to_string(const Word& w);
std::string to_string(const Permutation& p);

/// One digit per letter. Requires max_letter <= 9.
std::string to_compact_string(const Word& w);

/// Compact when max_letter <= 9, canonical otherwise. Used for display.
std::string display_string(const Word& w);

// --- order relations -------------------------------------------------------

/// Same length and every pairwise comparison (including equality) agrees.
bool order_isomorphic(std::span<const int> u, std::span<const int> v);
bool order_isomorphic(const Word& u, const Word& v);

/// Same length and every strict inequality of u also holds in v.
/// Ties in u may break either way in v.
bool order_homomorphic(std::span<const int> u, std::span<const int> v);
bool order_homomorphic(const Word& u, const Word& v);

/// The unique permutation p with w order-homomorphic to p in which equal
/// letters of w become decreasing entries of p. Rejects the empty word.
Permutation break_ties_decreasing(const Word& w);

/// The permutation order-isomorphic to the window, if its letters are
/// distinct; otherwise nullopt.
std::optional<Permutation> pattern_of(std::span<const int> window);

// --- permutation indexing (lexicographic) ----------------------------------

/// n! as a 64-bit integer; requires 0 <= n <= 20.
std::uint64_t factorial_u64(int n);

/// The index-th permutation of length n in lexicographic order, 0 <= index < n!.
Permutation nth_permutation(int n, std::uint64_t index);

/// Inverse of nth_permutation.
std::uint64_t permutation_index(const Permutation& p);

}  // namespace upw
