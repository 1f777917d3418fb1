#include "upw/ucycle.hpp"

#include <algorithm>
#include <numeric>

#include "upw/containment.hpp"

namespace upw {

CyclicWord CyclicWord::rotated(std::size_t k) const {
    const auto& v = word.letters();
    k %= v.size();
    std::vector<int> out(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return CyclicWord(Word(std::move(out)));
}

namespace {

void check_letters(const CyclicWord& w, int bound, const char* who) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.word[i] > bound)
            throw precondition_error(std::string(who) + ": letters out of alphabet range");
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

bool is_debruijn(const CyclicWord& w, int n, int k) {
    if (n < 1 || k < 1) throw precondition_error("is_debruijn: n, k must be positive");
    check_letters(w, k, "is_debruijn");
    const std::uint64_t want = pow_u64(static_cast<std::uint64_t>(k), n);
    if (w.size() != want) return false;

    // Count every cyclic window, encoded in base k.
    std::vector<int> counts(want, 0);
    const auto& v = w.word.letters();
    for (std::size_t s = 0; s < v.size(); ++s) {
        std::uint64_t code = 0;
        for (int j = 0; j < n; ++j)
            code = code * static_cast<std::uint64_t>(k) +
                   static_cast<std::uint64_t>(v[(s + static_cast<std::size_t>(j)) % v.size()] - 1);
        if (++counts[code] > 1) return false;
    }
    return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; });
}

CyclicWord generate_debruijn(int n, int k, std::uint64_t size_cap) {
    if (n < 1 || k < 1) throw precondition_error("generate_debruijn: n, k must be positive");
    if (n > 62 || pow_u64(static_cast<std::uint64_t>(k), n) > size_cap)
        throw precondition_error("generate_debruijn: k^n above size cap");

    // Hierholzer on the transition graph: vertices are words of [k]^(n-1),
    // edges append one letter. Smallest unused letter first, which pins the
    // output deterministically.
    const std::uint64_t vertices = pow_u64(static_cast<std::uint64_t>(k), n - 1);
    std::vector<int> next_letter(vertices, 0);  // letters 0..k-1 already used
    std::vector<std::pair<std::uint64_t, int>> path;  // (vertex, letter taken into it)
    std::vector<int> tour;
    path.emplace_back(0, -1);
    while (!path.empty()) {
        const std::uint64_t v = path.back().first;
        if (next_letter[v] < k) {
            const int letter = next_letter[v]++;
            path.emplace_back((v * static_cast<std::uint64_t>(k) +
                               static_cast<std::uint64_t>(letter)) % vertices,
                              letter);
        } else {
            tour.push_back(path.back().second);
            path.pop_back();
        }
    }
    tour.pop_back();  // drop the sentinel from the start vertex
    std::reverse(tour.begin(), tour.end());

    std::vector<int> letters;
    letters.reserve(tour.size());
    for (int x : tour) letters.push_back(x + 1);
    CyclicWord out{Word(std::move(letters))};
    return out;
}

bigint debruijn_count(int n, int k) {
    if (n < 1 || k < 1) throw precondition_error("debruijn_count: n, k must be positive");
    const bigint numerator = pow_big(factorial_big(k), pow_u64(static_cast<std::uint64_t>(k), n - 1));
    const bigint denominator = pow_big(k, static_cast<std::uint64_t>(n));
    const bigint q = numerator / denominator;
    if (q * denominator != numerator) throw std::logic_error("debruijn_count: inexact division");
    return q;
}

bool is_perm_ucycle(const CyclicWord& w, int n) {
    if (n < 1) throw precondition_error("is_perm_ucycle: n must be positive");
    if (n > max_pattern_length) throw precondition_error("is_perm_ucycle: n above supported cap");
    const std::uint64_t total = factorial_u64(n);
    if (w.size() != total) return false;

    // Length n! forces exactly-once, but both counts are checked anyway.
    std::vector<int> counts(total, 0);
    const auto& v = w.word.letters();
    std::vector<int> window(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < v.size(); ++s) {
        for (int j = 0; j < n; ++j)
            window[static_cast<std::size_t>(j)] = v[(s + static_cast<std::size_t>(j)) % v.size()];
        const auto pattern = pattern_of(window);
        if (!pattern) return false;
        if (++counts[permutation_index(*pattern)] > 1) return false;
    }
    return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; });
}

Word ucycle_to_word(const CyclicWord& w, int n) {
    if (!is_perm_ucycle(w, n)) throw precondition_error("ucycle_to_word: not a permutation ucycle");
    std::vector<int> out = w.word.letters();
    out.insert(out.end(), w.word.letters().begin(),
               w.word.letters().begin() + static_cast<std::ptrdiff_t>(n - 1));
    return Word(std::move(out));
}

namespace {

struct UcycleSearch {
    int n, alphabet;
    std::size_t length;
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    std::vector<int> word;
    std::vector<char> used;  // patterns already realized, by permutation index

    UcycleSearch(int n_, int alphabet_, std::uint64_t cap)
        : n(n_), alphabet(alphabet_), length(factorial_u64(n_)), node_cap(cap),
          used(factorial_u64(n_), 0) {}

    // Pattern of the window starting at s (wrapping); nullopt on a repeated
    // letter inside the window.
    std::optional<std::uint64_t> window_pattern(std::size_t s) const {
        std::vector<int> window(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            window[static_cast<std::size_t>(j)] = word[(s + static_cast<std::size_t>(j)) % length];
        const auto p = pattern_of(window);
        if (!p) return std::nullopt;
        return permutation_index(*p);
    }

    bool extend() {
        const std::size_t pos = word.size();
        if (pos == length) {
            // Close the cycle: the last n-1 wrapping windows must realize
            // fresh patterns too.
            std::vector<std::uint64_t> ids;
            for (std::size_t s = length - static_cast<std::size_t>(n) + 1; s < length; ++s) {
                const auto id = window_pattern(s);
                if (!id || used[*id]) { for (auto i : ids) used[i] = 0; return false; }
                if (std::find(ids.begin(), ids.end(), *id) != ids.end()) {
                    for (auto i : ids) used[i] = 0;
                    return false;
                }
                used[*id] = 1;
                ids.push_back(*id);
            }
            return true;
        }
        for (int letter = 1; letter <= alphabet; ++letter) {
            if (++nodes; node_cap && nodes > node_cap)
                throw budget_exhausted("ucycle search node budget exceeded");
            // Normalization: the first window is strictly increasing.
            if (pos < static_cast<std::size_t>(n) && pos > 0 && letter <= word.back()) continue;
            word.push_back(letter);
            bool ok = true;
            std::optional<std::uint64_t> id;
            if (pos + 1 >= static_cast<std::size_t>(n)) {
                id = window_pattern(pos + 1 - static_cast<std::size_t>(n));
                ok = id.has_value() && !used[*id];
            }
            if (ok) {
                if (id) used[*id] = 1;
                if (extend()) return true;
                if (id) used[*id] = 0;
            }
            word.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<CyclicWord> search_perm_ucycle(int n, int alphabet_size, std::uint64_t node_cap) {
    if (n < 1 || n > 5) throw precondition_error("ucycle search supports 1 <= n <= 5");
    if (alphabet_size < n) throw precondition_error("ucycle search: alphabet must cover [n]");
    if (n == 1) return CyclicWord(Word({1}));
    UcycleSearch search(n, alphabet_size, node_cap);
    if (!search.extend()) return std::nullopt;
    return CyclicWord(Word(std::move(search.word)));
}

}  // namespace upw
