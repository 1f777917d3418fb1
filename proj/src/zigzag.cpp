#include "upw/zigzag.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#include "upw/analytics.hpp"
#include "upw/bigint.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace upw {

void ZigzagCursor::advance(int letter) {
    if (letter < 1) throw precondition_error("zigzag letters must be positive");
    if (run_index == 0) {
        run_index = (letter % 2 != 0) ? 1 : 2;
        last_value = letter;
        return;
    }
    if ((last_value % 2) != (letter % 2)) {
        run_index += 1;  // next run has the right parity, any value fits
    } else {
        const bool odd_run = run_index % 2 != 0;
        const bool extends = odd_run ? letter > last_value : letter < last_value;
        if (!extends) run_index += 2;
    }
    last_value = letter;
}

int score(const Word& p) {
    if (p.empty()) throw precondition_error("score: empty word");
    ZigzagCursor cursor;
    for (std::size_t i = 0; i < p.size(); ++i) cursor.advance(p[i]);
    return cursor.run_index - static_cast<int>(p.size());
}

Word shift_up(const Word& p) {
    std::vector<int> letters;
    letters.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) letters.push_back(p[i] + 1);
    return Word(std::move(letters));
}

bool has_immediate_repetition(const Word& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == p[i + 1]) return true;
    return false;
}

namespace {

Word zigzag_runs(int runs, int cap) {
    std::vector<int> letters;
    for (int r = 1; r <= runs; ++r) {
        if (r % 2 != 0) {
            for (int v = 1; v <= cap; v += 2) letters.push_back(v);
        } else {
            for (int v = cap - (cap % 2); v >= 2; v -= 2) letters.push_back(v);
        }
    }
    return Word(std::move(letters));
}

/// Greedy leftmost match of q as a literal (equal-letter) subsequence of
/// host; 1-based indices, nullopt when q does not occur.
std::optional<std::vector<int>> greedy_literal_match(const Word& host, const Word& q) {
    std::vector<int> idx;
    idx.reserve(q.size());
    std::size_t pos = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        while (pos < host.size() && host[pos] != q[j]) ++pos;
        if (pos == host.size()) return std::nullopt;
        idx.push_back(static_cast<int>(pos) + 1);
        ++pos;
    }
    return idx;
}

}  // namespace

Word miller_word(int n) {
    if (n < 1) throw precondition_error("miller_word: n must be positive");
    return zigzag_runs(n, n + 1);
}

Word zigzag_word(int n) {
    if (n < 1) throw precondition_error("zigzag_word: n must be positive");
    return zigzag_runs(n, n);
}

Permutation zeta_permutation(int n) { return break_ties_decreasing(zigzag_word(n)); }

std::optional<std::pair<int, int>> distant_inverse_descent(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);  // 1-based positions by value
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = i + 1;
    for (int a = 1; a <= n; ++a) {
        const int v = pi[static_cast<std::size_t>(a - 1)];
        if (v < 2) continue;
        const int b = pos[static_cast<std::size_t>(v - 1)];
        if (b >= a + 2) return std::make_pair(a, b);
    }
    return std::nullopt;
}

std::optional<LayerDecomposition> layer_decomposition(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    LayerDecomposition out;
    int base = 0, i = 0;
    while (i < n) {
        const int len = pi[static_cast<std::size_t>(i)] - base;
        if (len < 1 || base + len > n) return std::nullopt;
        for (int j = 0; j < len; ++j)
            if (pi[static_cast<std::size_t>(i + j)] != base + len - j) return std::nullopt;
        out.lengths.push_back(len);
        const bool first_odd = (base + len) % 2 != 0;
        const bool last_odd = (base + 1) % 2 != 0;
        out.types.push_back(first_odd ? (last_odd ? LayerDecomposition::Type::odd_odd
                                                  : LayerDecomposition::Type::odd_even)
                                      : (last_odd ? LayerDecomposition::Type::even_odd
                                                  : LayerDecomposition::Type::even_even));
        base += len;
        i += len;
    }
    return out;
}

Permutation direct_sum(const Permutation& pi, const Permutation& sigma) {
    const int m = static_cast<int>(pi.size());
    std::vector<int> out;
    out.reserve(pi.size() + sigma.size());
    for (std::size_t i = 0; i < pi.size(); ++i) out.push_back(pi[i]);
    for (std::size_t i = 0; i < sigma.size(); ++i) out.push_back(sigma[i] + m);
    return Permutation(std::move(out));
}

Word did_reduction(const Permutation& pi, int a, int b) {
    const int n = static_cast<int>(pi.size());
    if (a < 1 || b > n || b < a + 2 ||
        pi[static_cast<std::size_t>(a - 1)] != pi[static_cast<std::size_t>(b - 1)] + 1)
        throw precondition_error("did_reduction: (a, b) is not a distant inverse-descent");
    const int vb = pi[static_cast<std::size_t>(b - 1)];
    std::vector<int> p;
    p.reserve(pi.size());
    for (int i = 0; i < n; ++i) {
        const int v = pi[static_cast<std::size_t>(i)];
        p.push_back(v <= vb ? v : v - 1);
    }
    return Word(std::move(p));
}

namespace {

// Embeds q (which must fit in the first n runs) into z_n and checks that the
// same indices realize pi inside zeta_n.
ContainmentWitness transport_through_zeta(const Word& q, const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    const Word zn = zigzag_word(n);
    auto idx = greedy_literal_match(zn, q);
    if (!idx) throw std::logic_error("zigzag embedding unexpectedly failed");
    ContainmentWitness witness{ContainmentMode::subsequence, *idx};
    const Permutation zeta = zeta_permutation(n);
    if (!order_isomorphic(extract(zeta.word(), witness), pi.word()))
        throw std::logic_error("zigzag transport verification failed");
    return witness;
}

}  // namespace

ContainmentWitness embed_via_distant_inverse_descent(const Permutation& pi) {
    const auto did = distant_inverse_descent(pi);
    if (!did) throw precondition_error("permutation has no distant inverse-descent");
    const Word p = did_reduction(pi, did->first, did->second);
    const Word q = score(p) <= 0 ? p : shift_up(p);
    if (score(q) > 0) throw std::logic_error("neither p nor p+1 embeds");
    return transport_through_zeta(q, pi);
}

Word layered_surgery(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    const auto layers = layer_decomposition(pi);
    if (!layers) throw precondition_error("layered_surgery: permutation is not layered");
    const std::size_t k = layers->lengths.size();
    if (k < 2) throw precondition_error("layered_surgery: needs at least two layers");
    if (layers->types.back() != LayerDecomposition::Type::even_odd)
        throw precondition_error("layered_surgery: ultimate layer must have even-odd type");

    const int ultimate_len = layers->lengths[k - 1];
    const int penult_len = layers->lengths[k - 2];
    const int penult_base = n - ultimate_len - penult_len;
    const auto penult_type = layers->types[k - 2];

    std::vector<int> p;
    p.reserve(pi.size());
    if (penult_type == LayerDecomposition::Type::even_odd) {
        // Decrement the first entry of the penultimate layer and the whole
        // ultimate layer.
        const int vb = penult_base + penult_len;
        for (int i = 0; i < n; ++i) {
            const int v = pi[static_cast<std::size_t>(i)];
            p.push_back(v < vb ? v : v - 1);
        }
    } else if (penult_type == LayerDecomposition::Type::even_even) {
        // Increment the whole penultimate layer and all but the first entry
        // of the ultimate layer.
        const int va = penult_base + 1;
        for (int i = 0; i < n; ++i) {
            const int v = pi[static_cast<std::size_t>(i)];
            p.push_back((v < va || v == n) ? v : v + 1);
        }
    } else {
        // The ultimate layer's last entry is one above the penultimate
        // layer's first entry, so that entry is even here.
        throw precondition_error("layered_surgery: unreachable penultimate type");
    }

    const Word word_p{std::vector<int>(p)};
    if (score(word_p) != 0) throw std::logic_error("surgery word does not have score 0");
    transport_through_zeta(word_p, pi);
    return word_p;
}

int layered_score_walk(const Permutation& pi) {
    const auto layers = layer_decomposition(pi);
    if (!layers) throw precondition_error("layered_score_walk: permutation is not layered");
    int s = 0;
    bool prev_last_even = true;  // virtual start node (even-even)
    for (const auto type : layers->types) {
        const bool first_even = type == LayerDecomposition::Type::even_even ||
                                type == LayerDecomposition::Type::even_odd;
        const bool last_even = type == LayerDecomposition::Type::even_even ||
                               type == LayerDecomposition::Type::odd_even;
        if (prev_last_even && first_even) s += 1;
        else if (!prev_last_even && !first_even) s -= 1;
        prev_last_even = last_even;
    }
    return s;
}

Permutation universal_permutation(int n) {
    if (n < 1) throw precondition_error("universal_permutation: n must be positive");
    const Permutation zeta = zeta_permutation(n);
    if (n % 2 != 0) return zeta;
    std::vector<int> out;
    out.reserve(zeta.size() + 1);
    out.push_back(static_cast<int>(zeta.size()) + 1);
    for (std::size_t i = 0; i < zeta.size(); ++i) out.push_back(zeta[i]);
    return Permutation(std::move(out));
}

CountingBound counting_bound_n_plus_1(int n) {
    if (n < 1) throw precondition_error("counting_bound_n_plus_1: n must be positive");
    // (n+1) (m/(n+1))^n >= n!  <=>  m^n >= n! (n+1)^(n-1), compared exactly.
    const bigint rhs = factorial_big(n) * pow_big(n + 1, static_cast<std::uint64_t>(n - 1));
    int m = 1;
    while (pow_big(m, static_cast<std::uint64_t>(n)) < rhs) ++m;
    return CountingBound{m, static_cast<double>(n) * n / std::exp(1.0)};
}

std::string containment_capacity(const std::vector<int>& multiplicities) {
    for (int r : multiplicities)
        if (r < 0) throw precondition_error("multiplicities must be nonnegative");
    bigint total = 0;
    for (std::size_t skip = 0; skip < multiplicities.size(); ++skip) {
        bigint term = 1;
        for (std::size_t j = 0; j < multiplicities.size(); ++j)
            if (j != skip) term *= multiplicities[j];
        total += term;
    }
    return total.str();
}

Permutation best_known_superpattern(int n) {
    if (n == 6) return Permutation({6, 14, 10, 2, 13, 17, 5, 8, 3, 12, 9, 16, 1, 7, 11, 4, 15});
    return universal_permutation(n);
}

namespace {

// Longest strictly increasing subsequence length (patience sorting).
int lis_length(const std::vector<int>& v) {
    std::vector<int> tails;
    for (int x : v) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) tails.push_back(x);
        else *it = x;
    }
    return static_cast<int>(tails.size());
}

int lds_length(const std::vector<int>& v) {
    std::vector<int> flipped;
    flipped.reserve(v.size());
    for (int x : v) flipped.push_back(-x);
    return lis_length(flipped);
}

// Containment is preserved by reverse, complement and inverse; candidates
// are pruned to the lexicographic minimum of their 8 symmetry images.
bool is_symmetry_canonical(const std::vector<int>& p) {
    const int m = static_cast<int>(p.size());
    std::vector<int> inv(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) inv[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] - 1)] = i + 1;
    const auto at = [&](int img, int i) -> int {
        switch (img) {
            case 0: return p[static_cast<std::size_t>(m - 1 - i)];              // reverse
            case 1: return m + 1 - p[static_cast<std::size_t>(i)];              // complement
            case 2: return m + 1 - p[static_cast<std::size_t>(m - 1 - i)];      // reverse-complement
            case 3: return inv[static_cast<std::size_t>(i)];                    // inverse
            case 4: return inv[static_cast<std::size_t>(m - 1 - i)];
            case 5: return m + 1 - inv[static_cast<std::size_t>(i)];
            default: return m + 1 - inv[static_cast<std::size_t>(m - 1 - i)];
        }
    };
    for (int img = 0; img < 7; ++img) {
        for (int i = 0; i < m; ++i) {
            const int x = at(img, i);
            const int y = p[static_cast<std::size_t>(i)];
            if (x < y) return false;
            if (x > y) break;
        }
    }
    return true;
}

bool superpattern_candidate_ok(const std::vector<int>& p, int n) {
    if (lis_length(p) < n || lds_length(p) < n) return false;
    if (!is_symmetry_canonical(p)) return false;
    return is_universal_serial(Word(std::vector<int>(p)), n, ContainmentMode::subsequence);
}

// Scans all permutations of length m in lexicographic order, in parallel
// blocks fixed by the first two entries. Returns the least universal
// candidate among symmetry-canonical representatives, if any.
std::optional<Permutation> scan_superpattern_level(int m, int n, std::uint64_t* nodes) {
    if (m < 3) {
        std::vector<int> p(static_cast<std::size_t>(m));
        std::iota(p.begin(), p.end(), 1);
        do {
            ++*nodes;
            if (superpattern_candidate_ok(p, n)) return Permutation(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return std::nullopt;
    }

    const int num_blocks = m * (m - 1);
    std::vector<std::optional<Permutation>> found(static_cast<std::size_t>(num_blocks));
    std::atomic<int> best_block{num_blocks};
    std::atomic<std::uint64_t> processed{0};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int block = 0; block < num_blocks; ++block) {
        if (block > best_block.load(std::memory_order_relaxed)) continue;
        const int a = block / (m - 1) + 1;
        int b = block % (m - 1) + 1;
        if (b >= a) ++b;
        std::vector<int> p;
        p.reserve(static_cast<std::size_t>(m));
        p.push_back(a);
        p.push_back(b);
        for (int v = 1; v <= m; ++v)
            if (v != a && v != b) p.push_back(v);
        std::uint64_t local = 0;
        do {
            ++local;
            if ((local & 0xfff) == 0 && block > best_block.load(std::memory_order_relaxed)) break;
            if (superpattern_candidate_ok(p, n)) {
                found[static_cast<std::size_t>(block)] = Permutation(p);
                int expected = best_block.load();
                while (block < expected && !best_block.compare_exchange_weak(expected, block)) {}
                break;
            }
        } while (std::next_permutation(p.begin() + 2, p.end()));
        processed.fetch_add(local, std::memory_order_relaxed);
    }

    *nodes += processed.load();
    for (int block = 0; block < num_blocks; ++block)
        if (found[static_cast<std::size_t>(block)]) return found[static_cast<std::size_t>(block)];
    return std::nullopt;
}

}  // namespace

SearchOutcome search_shortest_superpattern(int n, const SearchBudget& budget) {
    if (n < 1 || n > 6)
        throw precondition_error("superpattern search supports 1 <= n <= 6");
    const Permutation incumbent = best_known_superpattern(n);
    if (!is_universal(incumbent.word(), n, ContainmentMode::subsequence))
        throw std::logic_error("superpattern incumbent failed verification");

    SearchOutcome out;
    out.optimal_length = static_cast<int>(incumbent.size());
    out.witness = incumbent.word();
    // n = 5 refutation is a long run; n = 6 is verification-only.
    if (n >= 5 && (!budget.long_run || n >= 6)) return out;

    std::uint64_t nodes = 0;
    for (int m = arratia_min_length(n);; ++m) {
        if (m >= static_cast<int>(incumbent.size())) {
            out.nodes_expanded = nodes;
            out.exhaustive = true;
            return out;
        }
        const std::uint64_t level = factorial_u64(m);
        if (!budget.long_run && nodes + level > budget.max_nodes) {
            out.nodes_expanded = nodes;
            return out;  // budget would be exceeded; incumbent stands unproven
        }
        if (auto witness = scan_superpattern_level(m, n, &nodes)) {
            out.optimal_length = m;
            out.witness = witness->word();
            out.nodes_expanded = nodes;
            out.exhaustive = true;
            return out;
        }
    }
}

}  // namespace upw
