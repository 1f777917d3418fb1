#include "upw/containment.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace upw {

std::optional<ContainmentWitness> contains_factor(const Word& host, const Permutation& pattern) {
    const std::size_t n = pattern.size();
    if (n == 0) return ContainmentWitness{ContainmentMode::factor, {}};
    if (host.size() < n) return std::nullopt;
    const auto h = host.view();
    for (std::size_t s = 0; s + n <= host.size(); ++s) {
        if (order_isomorphic(h.subspan(s, n), pattern.word().view())) {
            std::vector<int> idx(n);
            std::iota(idx.begin(), idx.end(), static_cast<int>(s) + 1);
            return ContainmentWitness{ContainmentMode::factor, std::move(idx)};
        }
    }
    return std::nullopt;
}

namespace {

// Backtracking matcher. Pattern positions are filled left to right; position
// j only needs to be consistent with the nearest already-placed pattern
// values below and above pattern[j], which keeps all pairwise comparisons
// consistent by transitivity.
struct PatternMatcher {
    const Word& host;
    const Permutation& pattern;
    int n, m;
    std::vector<int> below;  // index of earlier position with largest smaller value, -1 if none
    std::vector<int> above;  // index of earlier position with smallest larger value, -1 if none
    std::vector<int> chosen; // host indices, 0-based

    PatternMatcher(const Word& h, const Permutation& p)
        : host(h), pattern(p), n(static_cast<int>(p.size())), m(static_cast<int>(h.size())),
          below(p.size(), -1), above(p.size(), -1), chosen(p.size(), 0) {
        for (int j = 0; j < n; ++j) {
            int best_below = -1, best_above = -1;
            for (int i = 0; i < j; ++i) {
                if (pattern[static_cast<std::size_t>(i)] < pattern[static_cast<std::size_t>(j)]) {
                    if (best_below < 0 || pattern[static_cast<std::size_t>(i)] >
                                              pattern[static_cast<std::size_t>(best_below)])
                        best_below = i;
                } else {
                    if (best_above < 0 || pattern[static_cast<std::size_t>(i)] <
                                              pattern[static_cast<std::size_t>(best_above)])
                        best_above = i;
                }
            }
            below[static_cast<std::size_t>(j)] = best_below;
            above[static_cast<std::size_t>(j)] = best_above;
        }
    }

    bool search(int j, int start) {
        const int lo_idx = below[static_cast<std::size_t>(j)];
        const int hi_idx = above[static_cast<std::size_t>(j)];
        const int lo = lo_idx < 0 ? 0 : host[static_cast<std::size_t>(chosen[static_cast<std::size_t>(lo_idx)])];
        const int hi = hi_idx < 0 ? std::numeric_limits<int>::max()
                                  : host[static_cast<std::size_t>(chosen[static_cast<std::size_t>(hi_idx)])];
        for (int i = start; i <= m - (n - j); ++i) {
            const int x = host[static_cast<std::size_t>(i)];
            if (x <= lo || x >= hi) continue;
            chosen[static_cast<std::size_t>(j)] = i;
            if (j + 1 == n || search(j + 1, i + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<ContainmentWitness> contains_pattern(const Word& host, const Permutation& pattern) {
    if (pattern.empty()) return ContainmentWitness{ContainmentMode::subsequence, {}};
    if (host.size() < pattern.size()) return std::nullopt;
    PatternMatcher matcher(host, pattern);
    if (!matcher.search(0, 0)) return std::nullopt;
    std::vector<int> idx;
    idx.reserve(pattern.size());
    for (int i : matcher.chosen) idx.push_back(i + 1);
    return ContainmentWitness{ContainmentMode::subsequence, std::move(idx)};
}

Word extract(const Word& host, const ContainmentWitness& witness) {
    std::vector<int> letters;
    letters.reserve(witness.indices.size());
    for (int i : witness.indices) {
        if (i < 1 || static_cast<std::size_t>(i) > host.size())
            throw precondition_error("witness index out of range");
        letters.push_back(host[static_cast<std::size_t>(i - 1)]);
    }
    return Word(std::move(letters));
}

namespace {

void check_batch_n(int n) {
    if (n < 1) throw precondition_error("pattern length must be at least 1");
    if (n > max_pattern_length) throw precondition_error("pattern length above supported cap");
}

// Marks which length-n patterns occur as factors, indexed by permutation_index.
std::vector<char> factor_seen_table(const Word& host, int n) {
    std::vector<char> seen(factorial_u64(n), 0);
    if (host.size() < static_cast<std::size_t>(n)) return seen;
    const auto h = host.view();
    for (std::size_t s = 0; s + static_cast<std::size_t>(n) <= host.size(); ++s) {
        if (auto p = pattern_of(h.subspan(s, static_cast<std::size_t>(n))))
            seen[permutation_index(*p)] = 1;
    }
    return seen;
}

}  // namespace

std::vector<Permutation> missing_patterns_serial(const Word& host, int n, ContainmentMode mode) {
    check_batch_n(n);
    const std::uint64_t total = factorial_u64(n);
    std::vector<Permutation> missing;
    if (mode == ContainmentMode::factor) {
        const auto seen = factor_seen_table(host, n);
        for (std::uint64_t id = 0; id < total; ++id)
            if (!seen[id]) missing.push_back(nth_permutation(n, id));
        return missing;
    }
    for (std::uint64_t id = 0; id < total; ++id) {
        const Permutation p = nth_permutation(n, id);
        if (!contains_pattern(host, p)) missing.push_back(p);
    }
    return missing;
}

std::vector<Permutation> missing_patterns(const Word& host, int n, ContainmentMode mode) {
    check_batch_n(n);
    if (mode == ContainmentMode::factor) return missing_patterns_serial(host, n, mode);
    const std::int64_t total = static_cast<std::int64_t>(factorial_u64(n));
    std::vector<char> missing_flag(static_cast<std::size_t>(total), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::int64_t id = 0; id < total; ++id) {
        const Permutation p = nth_permutation(n, static_cast<std::uint64_t>(id));
        if (!contains_pattern(host, p)) missing_flag[static_cast<std::size_t>(id)] = 1;
    }
    std::vector<Permutation> missing;
    for (std::int64_t id = 0; id < total; ++id)
        if (missing_flag[static_cast<std::size_t>(id)])
            missing.push_back(nth_permutation(n, static_cast<std::uint64_t>(id)));
    return missing;
}

bool is_universal_serial(const Word& host, int n, ContainmentMode mode) {
    check_batch_n(n);
    const std::uint64_t total = factorial_u64(n);
    if (mode == ContainmentMode::factor) {
        const auto seen = factor_seen_table(host, n);
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }
    for (std::uint64_t id = 0; id < total; ++id)
        if (!contains_pattern(host, nth_permutation(n, id))) return false;
    return true;
}

bool is_universal(const Word& host, int n, ContainmentMode mode) {
    check_batch_n(n);
    if (mode == ContainmentMode::factor) return is_universal_serial(host, n, mode);
    const std::int64_t total = static_cast<std::int64_t>(factorial_u64(n));
    std::atomic<bool> universal{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::int64_t id = 0; id < total; ++id) {
        if (!universal.load(std::memory_order_relaxed)) continue;
        if (!contains_pattern(host, nth_permutation(n, static_cast<std::uint64_t>(id))))
            universal.store(false, std::memory_order_relaxed);
    }
    return universal.load();
}

}  // namespace upw
