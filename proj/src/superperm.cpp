#include "upw/superperm.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

namespace upw {

namespace {

Permutation rotate_left(const Permutation& p) {
    std::vector<int> v;
    v.reserve(p.size());
    for (std::size_t i = 1; i < p.size(); ++i) v.push_back(p[i]);
    v.push_back(p[0]);
    return Permutation(std::move(v));
}

void check_alphabet(const Word& w, int n, const char* who) {
    if (n < 1) throw precondition_error(std::string(who) + ": n must be positive");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > n) throw precondition_error(std::string(who) + ": letters must lie in [n]");
}

}  // namespace

CyclicClass cyclic_class(const Permutation& pi) {
    if (pi.empty()) throw precondition_error("cyclic_class: empty permutation");
    const int n = static_cast<int>(pi.size());
    std::vector<Permutation> rotations;
    rotations.reserve(static_cast<std::size_t>(n));
    Permutation cur = pi;
    for (int i = 0; i < n; ++i) {
        rotations.push_back(cur);
        cur = rotate_left(cur);
    }
    const auto least = std::min_element(rotations.begin(), rotations.end());
    std::rotate(rotations.begin(), least, rotations.end());
    return CyclicClass{std::move(rotations)};
}

Trajectory trajectory(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    if (n < 2) throw precondition_error("trajectory: needs length at least 2");
    Trajectory t;
    t.origin = pi;
    t.visits.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1));
    for (int j = 0; j <= n - 2; ++j) {
        // Representative: first n-1 letters rotated left j times, last fixed.
        std::vector<int> rep;
        rep.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n - 1; ++i) rep.push_back(pi[static_cast<std::size_t>((i + j) % (n - 1))]);
        rep.push_back(pi[static_cast<std::size_t>(n - 1)]);
        Permutation cur{std::move(rep)};
        for (int i = 0; i < n; ++i) {
            t.visits.push_back(cur);
            cur = rotate_left(cur);
        }
    }
    return t;
}

WasteDecomposition waste_decomposition(const Word& w, int n) {
    check_alphabet(w, n, "waste_decomposition");
    if (n > 20) throw precondition_error("waste_decomposition: n above supported cap");

    WasteDecomposition out;
    out.positions.resize(w.size());

    std::unordered_set<std::uint64_t> seen;
    std::unordered_map<std::uint64_t, int> class_progress;  // keyed by class representative id
    std::vector<std::uint64_t> track;                       // trajectory ids being followed
    int track_idx = -1;
    bool deviated = false;
    int waste_since = 0;
    std::ptrdiff_t last_completion = -2;  // position whose window completed a cyclic class

    const auto h = w.view();
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::optional<Permutation> window;
        if (i + 1 >= static_cast<std::size_t>(n)) {
            const auto span = h.subspan(i + 1 - static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            std::uint32_t mask = 0;
            bool distinct = true;
            for (int x : span) {
                if (mask & (1u << x)) { distinct = false; break; }
                mask |= 1u << x;
            }
            if (distinct) window = Permutation(std::vector<int>(span.begin(), span.end()));
        }

        const std::uint64_t id = window ? permutation_index(*window) : 0;
        const bool is_new = window && !seen.contains(id);

        if (!is_new) {
            auto& pos = out.positions[i];
            if (i + 1 < static_cast<std::size_t>(n)) {
                pos.tag = LetterTag::wasted_initial;
            } else if (static_cast<std::ptrdiff_t>(i) - 1 == last_completion) {
                pos.tag = LetterTag::wasted_leave_class;
            } else {
                pos.tag = LetterTag::wasted_other;
            }
            ++waste_since;
            if (!track.empty() && !deviated) {
                const bool at_class_final = (track_idx + 1) % n == 0;
                if (!at_class_final || waste_since >= 2) deviated = true;
            }
            continue;
        }

        seen.insert(id);
        const std::uint64_t class_key = permutation_index(cyclic_class(*window).representative());
        if (++class_progress[class_key] == n) last_completion = static_cast<std::ptrdiff_t>(i);

        if (track.empty()) {
            const auto t = trajectory(*window);
            track.clear();
            for (const auto& p : t.visits) track.push_back(permutation_index(p));
            track_idx = 0;
        } else {
            bool on_track = false;
            if (!deviated && static_cast<std::size_t>(track_idx + 1) < track.size() &&
                track[static_cast<std::size_t>(track_idx + 1)] == id) {
                const bool boundary = (track_idx + 1) % n == 0;
                on_track = waste_since == (boundary ? 1 : 0);
            }
            if (on_track) {
                ++track_idx;
            } else {
                // Trajectory change: the wasted letter just before this first
                // permutation of the new trajectory is the change letter,
                // unless it already pays for leaving a completed class.
                if (waste_since >= 1 &&
                    out.positions[i - 1].tag != LetterTag::wasted_leave_class)
                    out.positions[i - 1].tag = LetterTag::wasted_change_trajectory;
                const auto t = trajectory(*window);
                track.clear();
                for (const auto& p : t.visits) track.push_back(permutation_index(p));
                track_idx = 0;
                deviated = false;
            }
        }
        waste_since = 0;
        out.positions[i].tag = LetterTag::new_permutation;
        out.positions[i].completed = *window;
    }

    for (const auto& pos : out.positions) {
        switch (pos.tag) {
            case LetterTag::new_permutation: ++out.new_permutations; break;
            case LetterTag::wasted_initial: ++out.wasted_initial; break;
            case LetterTag::wasted_leave_class: ++out.wasted_leave_class; break;
            case LetterTag::wasted_change_trajectory: ++out.wasted_change_trajectory; break;
            case LetterTag::wasted_other: ++out.wasted_other; break;
        }
    }
    return out;
}

bool is_superpermutation(const Word& w, int n) {
    check_alphabet(w, n, "is_superpermutation");
    return is_universal_serial(w, n, ContainmentMode::factor);
}

Word at_superpermutation(int n, int cap) {
    if (n < 1) throw precondition_error("at_superpermutation: n must be positive");
    if (n > cap) throw precondition_error("at_superpermutation: n above configured cap");
    std::vector<int> w = {1};
    for (int k = 2; k <= n; ++k) {
        std::vector<int> next;
        for (std::size_t s = 0; s + static_cast<std::size_t>(k) - 1 <= w.size(); ++s) {
            const std::span<const int> window(w.data() + s, static_cast<std::size_t>(k) - 1);
            std::uint32_t mask = 0;
            bool distinct = true;
            for (int x : window) {
                if (mask & (1u << x)) { distinct = false; break; }
                mask |= 1u << x;
            }
            if (!distinct) continue;
            std::vector<int> block(window.begin(), window.end());
            block.push_back(k);
            block.insert(block.end(), window.begin(), window.end());
            if (next.empty()) {
                next = std::move(block);
                continue;
            }
            std::size_t overlap = std::min(next.size(), block.size());
            for (; overlap > 0; --overlap) {
                if (std::equal(next.end() - static_cast<std::ptrdiff_t>(overlap), next.end(),
                               block.begin()))
                    break;
            }
            next.insert(next.end(), block.begin() + static_cast<std::ptrdiff_t>(overlap),
                        block.end());
        }
        w = std::move(next);
    }
    return Word(std::move(w));
}

SuperpermBounds superperm_bounds(int n) {
    if (n < 1 || n > 20) throw precondition_error("superperm_bounds: n out of range 1..20");
    const auto f = [](int k) { return static_cast<long long>(factorial_u64(k)); };
    SuperpermBounds b;
    b.n = n;
    b.lower_window_count = f(n) + n - 1;
    b.lower_cyclic_class = f(n) + f(n - 1) + n - 2;
    if (n >= 2) b.lower_trajectory = f(n) + f(n - 1) + f(n - 2) + n - 3;
    // The +1 strengthening contradicts the known optima below n = 5, so it
    // is only reported from there on.
    if (n >= 5) b.lower_trajectory_plus_one = b.lower_trajectory + 1;
    long long sum = 0;
    for (int k = 1; k <= n; ++k) sum += f(k);
    b.upper_recursive = sum;
    if (n >= 4) b.upper_egan = f(n) + f(n - 1) + f(n - 2) + f(n - 3) + n - 3;
    static constexpr long long known_exact[] = {1, 3, 9, 33, 153};
    if (n <= 5) b.exact = known_exact[n - 1];
    if (n == 6) b.record_upper = 872;
    if (n == 7) b.record_upper = 5906;
    return b;
}

namespace {

struct SuperpermTables {
    int n = 0;
    std::uint32_t total = 0;
    std::uint32_t classes = 0;
    std::vector<std::uint32_t> class_index;    // by permutation index
    std::vector<std::uint8_t> member_offset;   // rotation steps from the class representative
    std::vector<std::uint32_t> successor;      // left rotation, by permutation index

    explicit SuperpermTables(int n_) : n(n_) {
        total = static_cast<std::uint32_t>(factorial_u64(n));
        class_index.assign(total, total);
        member_offset.assign(total, 0);
        successor.assign(total, 0);
        std::uint32_t next_class = 0;
        for (std::uint32_t id = 0; id < total; ++id) {
            if (class_index[id] != total) continue;
            Permutation cur = cyclic_class(nth_permutation(n, id)).representative();
            for (int k = 0; k < n; ++k) {
                const Permutation nxt = rotate_left(cur);
                const auto cur_id = static_cast<std::uint32_t>(permutation_index(cur));
                class_index[cur_id] = next_class;
                member_offset[cur_id] = static_cast<std::uint8_t>(k);
                successor[cur_id] = static_cast<std::uint32_t>(permutation_index(nxt));
                cur = nxt;
            }
            ++next_class;
        }
        classes = next_class;
    }
};

enum class DfsResult { found, refuted, stopped };

// Depth-first search for a word of length target containing all n!
// permutations as factors. Symmetry: letters make their first appearance in
// increasing order. Pruning: remaining new permutations plus the wasted
// letters forced by the unseen arcs of the cyclic classes.
struct SuperpermDfs {
    const SuperpermTables& tables;
    int n;
    int target;
    std::uint64_t node_limit;
    double time_limit;
    std::chrono::steady_clock::time_point t0;

    std::vector<int> word;
    std::vector<char> seen;
    std::vector<std::uint32_t> class_mask;  // seen members per class, bit = member offset
    std::uint32_t seen_count = 0;
    int arcs_total = 0;
    std::uint64_t nodes = 0;
    bool stopped = false;

    SuperpermDfs(const SuperpermTables& t, int target_, const SearchBudget& budget)
        : tables(t), n(t.n), target(target_),
          node_limit(budget.max_nodes), time_limit(budget.max_seconds),
          t0(std::chrono::steady_clock::now()) {
        seen.assign(tables.total, 0);
        class_mask.assign(tables.classes, 0);
        arcs_total = static_cast<int>(tables.classes);  // every class one unseen arc
    }

    // Change in the number of maximal cyclic unseen arcs when marking a
    // member of a class of size n.
    int mark_member(std::uint32_t cls, int offset) {
        const std::uint32_t mask = class_mask[cls];
        int delta;
        if (mask == 0) {
            delta = 0;  // whole cycle stays one arc
        } else {
            const bool left = mask & (1u << ((offset + n - 1) % n));
            const bool right = mask & (1u << ((offset + 1) % n));
            delta = left && right ? -1 : (!left && !right ? +1 : 0);
        }
        class_mask[cls] = mask | (1u << offset);
        arcs_total += delta;
        return delta;
    }

    void unmark_member(std::uint32_t cls, int offset, int delta) {
        class_mask[cls] &= ~(1u << offset);
        arcs_total -= delta;
    }

    bool out_of_budget() {
        if (nodes > node_limit) return true;
        if (time_limit > 0 && (nodes & 0xffff) == 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            if (dt.count() > time_limit) return true;
        }
        return false;
    }

    std::optional<std::uint32_t> window_id() const {
        const std::size_t len = word.size();
        if (len < static_cast<std::size_t>(n)) return std::nullopt;
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i) {
            const int x = word[len - static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
            if (mask & (1u << x)) return std::nullopt;
            mask |= 1u << x;
        }
        const Permutation p(std::vector<int>(word.end() - n, word.end()));
        return static_cast<std::uint32_t>(permutation_index(p));
    }

    DfsResult run(int max_used) {
        if (stopped) return DfsResult::stopped;
        const int len = static_cast<int>(word.size());
        // One arc may be entered without a wasted letter, except after a
        // valid window whose rotation successor is already seen: there the
        // next position is wasted whatever the letter (only the rotation
        // keeps the window repeat-free, and it repeats a permutation).
        const auto last = window_id();
        const int free_entry = last && seen[tables.successor[*last]] ? 0 : 1;
        const int remaining = static_cast<int>(tables.total - seen_count);
        if (len + remaining + std::max(0, arcs_total - free_entry) > target)
            return DfsResult::refuted;

        const int letter_cap = std::min(max_used + 1, n);
        for (int letter = 1; letter <= letter_cap; ++letter) {
            if (len > 0 && word.back() == letter) continue;  // adjacent repeat never helps
            ++nodes;
            if (out_of_budget()) { stopped = true; return DfsResult::stopped; }
            word.push_back(letter);

            const auto id = window_id();
            const bool is_new = id && !seen[*id];
            int delta = 0;
            if (is_new) {
                seen[*id] = 1;
                ++seen_count;
                delta = mark_member(tables.class_index[*id], tables.member_offset[*id]);
                if (seen_count == tables.total) return DfsResult::found;
            }

            const DfsResult r = run(std::max(max_used, letter));
            if (r != DfsResult::refuted) return r;

            if (is_new) {
                unmark_member(tables.class_index[*id], tables.member_offset[*id], delta);
                seen[*id] = 0;
                --seen_count;
            }
            word.pop_back();
        }
        return DfsResult::refuted;
    }
};

}  // namespace

SearchOutcome search_shortest_superperm(int n, const SearchBudget& budget) {
    if (n < 1 || n > 5) throw precondition_error("superperm search supports 1 <= n <= 5");
    if (n == 1) return SearchOutcome{1, Word({1}), 0, true};

    const Word incumbent = at_superpermutation(n);
    SearchOutcome out;
    out.optimal_length = static_cast<int>(incumbent.size());
    out.witness = incumbent;
    // Refuting length 152 for n = 5 is far beyond desk scale.
    if (n == 5 && !budget.long_run) return out;

    const SuperpermTables tables(n);
    std::uint64_t nodes = 0;
    const auto bounds = superperm_bounds(n);
    for (int target = static_cast<int>(bounds.lower_trajectory);; ++target) {
        SuperpermDfs dfs(tables, target, budget);
        dfs.node_limit = budget.max_nodes - std::min(budget.max_nodes, nodes);
        const DfsResult r = dfs.run(0);
        nodes += dfs.nodes;
        if (r == DfsResult::found) {
            out.optimal_length = static_cast<int>(dfs.word.size());
            out.witness = Word(dfs.word);
            out.nodes_expanded = nodes;
            out.exhaustive = true;
            return out;
        }
        if (r == DfsResult::stopped) {
            out.nodes_expanded = nodes;
            return out;  // incumbent stands, unproven
        }
        if (target >= static_cast<int>(incumbent.size()))
            throw std::logic_error("superperm search refuted an achievable length");
    }
}

}  // namespace upw
