#include "upw/subseq.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "upw/containment.hpp"

namespace upw {

namespace {

void check_alphabet(const Word& w, int n, const char* who) {
    if (n < 1) throw precondition_error(std::string(who) + ": n must be positive");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > n) throw precondition_error(std::string(who) + ": letters must lie in [n]");
}

// next_at[p][x] = smallest 0-based index >= p with letter x+1, or size.
std::vector<std::vector<int>> next_occurrence_table(const Word& w, int n) {
    const int m = static_cast<int>(w.size());
    std::vector<std::vector<int>> next(static_cast<std::size_t>(m) + 1,
                                       std::vector<int>(static_cast<std::size_t>(n), m));
    for (int p = m - 1; p >= 0; --p) {
        next[static_cast<std::size_t>(p)] = next[static_cast<std::size_t>(p) + 1];
        next[static_cast<std::size_t>(p)][static_cast<std::size_t>(w[static_cast<std::size_t>(p)] - 1)] = p;
    }
    return next;
}

}  // namespace

bool is_subseq_universal_restricted(const Word& w, int n) {
    check_alphabet(w, n, "is_subseq_universal_restricted");
    if (n > max_pattern_length)
        throw precondition_error("is_subseq_universal_restricted: n above supported cap");
    const auto next = next_occurrence_table(w, n);
    const int m = static_cast<int>(w.size());
    const std::uint64_t total = factorial_u64(n);
    for (std::uint64_t id = 0; id < total; ++id) {
        const Permutation p = nth_permutation(n, id);
        int pos = 0;
        bool ok = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
            pos = next[static_cast<std::size_t>(pos)][static_cast<std::size_t>(p[j] - 1)];
            if (pos == m) { ok = false; break; }
            ++pos;
        }
        if (!ok) return false;
    }
    return true;
}

AdversaryResult greedy_adversary(const Word& w, int n) {
    check_alphabet(w, n, "greedy_adversary");
    const auto next = next_occurrence_table(w, n);
    const int m = static_cast<int>(w.size());

    AdversaryResult out;
    std::vector<int> chosen;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    int pos = 0;  // next unscanned index
    for (int step = 0; step < n; ++step) {
        int pick = 0, pick_at = -1;
        for (int s = 1; s <= n; ++s) {
            if (used[static_cast<std::size_t>(s)]) continue;
            const int at = next[static_cast<std::size_t>(pos)][static_cast<std::size_t>(s - 1)];
            if (at > pick_at) { pick = s; pick_at = at; }
        }
        used[static_cast<std::size_t>(pick)] = 1;
        chosen.push_back(pick);
        if (pick_at == m) {  // the pick never occurs again: w misses this word
            out.chosen = Word(std::move(chosen));
            return out;
        }
        out.match_positions.push_back(pick_at + 1);
        pos = pick_at + 1;
    }
    out.chosen = Word(std::move(chosen));
    out.contained = true;
    out.end_index = out.match_positions.back();
    return out;
}

RestrictedBounds restricted_bounds(int n) {
    if (n < 1) throw precondition_error("restricted_bounds: n must be positive");
    RestrictedBounds b;
    b.n = n;
    static constexpr long long newey[] = {1, 3, 7, 12, 19, 28, 39};
    if (n <= 7) b.exact = newey[n - 1];
    const long long nn = static_cast<long long>(n) * n;
    b.lower_adversary = (nn + n) / 2;
    if (n >= 3) b.upper_quadratic = nn - 2 * n + 4;
    if (n >= 10) b.upper_quadratic_minus_one = nn - 2 * n + 3;
    if (n >= 7) b.upper_radomirovic = (3 * nn - 7 * n + 19 + 2) / 3;  // exact ceiling
    return b;
}

namespace {

enum class DfsResult { found, refuted, stopped };

// Word-building search over [n] for a subsequence-universal word of the
// target length. Symmetry: first appearances in increasing order. An
// adjacent repeat can always be dropped without losing containment, so
// those branches are skipped (sound within iterative deepening). Pruning
// replays the adversary argument on the prefix.
struct RestrictedDfs {
    int n;
    int target;
    std::uint64_t node_limit;
    double time_limit;
    std::chrono::steady_clock::time_point t0;

    std::vector<int> word;
    std::uint64_t nodes = 0;
    bool stopped = false;

    RestrictedDfs(int n_, int target_, const SearchBudget& budget)
        : n(n_), target(target_), node_limit(budget.max_nodes), time_limit(budget.max_seconds),
          t0(std::chrono::steady_clock::now()) {}

    // Lower bound on the total length of any universal word extending the
    // current prefix. Runs the adversary inside the prefix; once a needed
    // symbol is exhausted, the remaining steps must land in the suffix and
    // each step strictly advances.
    int completion_bound() const {
        const int k = static_cast<int>(word.size());
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        int pos = 0;  // 0-based, next unscanned
        for (int step = 0; step < n; ++step) {
            int pick_at = -1;
            int missing = 0;
            for (int s = 1; s <= n; ++s) {
                if (used[static_cast<std::size_t>(s)]) continue;
                int at = static_cast<int>(word.size());
                for (int p = pos; p < k; ++p)
                    if (word[static_cast<std::size_t>(p)] == s) { at = p; break; }
                if (at == k) { missing = s; break; }
                if (at > pick_at) pick_at = at;
            }
            if (missing != 0) {
                const int steps_left = n - step;  // this one and the ones after
                // This step's match sits past the prefix (position >= k+1,
                // 1-based) and also at least n-step symbols past the
                // previous match; later steps add a shrinking triangle.
                const int this_step = std::max(k + 1, pos + (n - step));
                return this_step + (steps_left - 1) * steps_left / 2;
            }
            used[static_cast<std::size_t>(word[static_cast<std::size_t>(pick_at)])] = 1;
            pos = pick_at + 1;
        }
        return pos;  // adversary permutation already contained in the prefix
    }

    bool out_of_budget() {
        if (nodes > node_limit) return true;
        if (time_limit > 0 && (nodes & 0xffff) == 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            if (dt.count() > time_limit) return true;
        }
        return false;
    }

    DfsResult run(int max_used) {
        if (stopped) return DfsResult::stopped;
        const int len = static_cast<int>(word.size());
        if (len == target)
            return is_subseq_universal_restricted(Word(std::vector<int>(word)), n)
                       ? DfsResult::found
                       : DfsResult::refuted;
        const int letter_cap = std::min(max_used + 1, n);
        for (int letter = 1; letter <= letter_cap; ++letter) {
            if (len > 0 && word.back() == letter) continue;
            ++nodes;
            if (out_of_budget()) { stopped = true; return DfsResult::stopped; }
            word.push_back(letter);
            if (completion_bound() <= target) {
                const DfsResult r = run(std::max(max_used, letter));
                if (r != DfsResult::refuted) return r;
            }
            word.pop_back();
        }
        return DfsResult::refuted;
    }
};

Word repeated_identity(int n) {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int v = 1; v <= n; ++v) w.push_back(v);
    return Word(std::move(w));
}

}  // namespace

SearchOutcome search_shortest_restricted(int n, const SearchBudget& budget) {
    if (n < 1 || n > 5) throw precondition_error("restricted search supports 1 <= n <= 5");
    if (n == 1) return SearchOutcome{1, Word({1}), 0, true};

    // Fallback witness: n sweeps of 1..n embed any permutation row by row.
    const Word incumbent = repeated_identity(n);
    SearchOutcome out;
    out.optimal_length = static_cast<int>(incumbent.size());
    out.witness = incumbent;
    if (n == 5 && !budget.long_run) return out;

    std::uint64_t nodes = 0;
    for (int target = n * (n + 1) / 2;; ++target) {
        RestrictedDfs dfs(n, target, budget);
        dfs.node_limit = budget.max_nodes - std::min(budget.max_nodes, nodes);
        const DfsResult r = dfs.run(0);
        nodes += dfs.nodes;
        if (r == DfsResult::found) {
            out.optimal_length = target;
            out.witness = Word(dfs.word);
            out.nodes_expanded = nodes;
            out.exhaustive = true;
            return out;
        }
        if (r == DfsResult::stopped) {
            out.nodes_expanded = nodes;
            return out;
        }
        if (target >= static_cast<int>(incumbent.size()))
            throw std::logic_error("restricted search refuted an achievable length");
    }
}

}  // namespace upw
