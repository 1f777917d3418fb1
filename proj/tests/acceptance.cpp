// End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
// binary exits nonzero if any criterion fails. Runs at desk scale with
// default budgets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "test_helpers.hpp"
#include "upw/analytics.hpp"
#include "upw/containment.hpp"
#include "upw/subseq.hpp"
#include "upw/superperm.hpp"
#include "upw/ucycle.hpp"
#include "upw/zigzag.hpp"

using namespace upw;
using namespace upw::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s — %s (%.1f s)%s%s\n", number, ok ? "PASS" : "FAIL",
                label.c_str(), sec, error.empty() ? "" : " error: ", error.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool check(bool condition, const char* what) {
    if (!condition) std::printf("    failed: %s\n", what);
    return condition;
}

}  // namespace

int main() {
    // 1. Fixture verification.
    criterion(1, "fixture verification", [] {
        bool ok = true;
        ok &= check(is_superpermutation(parse_word("123121321"), 3), "length-9 word, n=3");
        ok &= check(is_superpermutation(load_fixture("superperm/n4.txt"), 4), "33-letter word, n=4");
        ok &= check(is_debruijn(CyclicWord(load_fixture("ucycle/debruijn_3_3.txt")), 3, 3),
                    "de Bruijn (3,3) cycle");
        const CyclicWord uc(load_fixture("ucycle/perm_ucycle_4.txt"));
        ok &= check(is_perm_ucycle(uc, 4), "permutation ucycle, n=4");
        const Word lin = ucycle_to_word(uc, 4);
        ok &= check(lin.size() == 27 && missing_patterns(lin, 4, ContainmentMode::factor).empty(),
                    "27-letter linearization universal");
        ok &= check(is_subseq_universal_restricted(load_fixture("subseq/knuth_n3.txt"), 3),
                    "restricted word, n=3");
        ok &= check(is_subseq_universal_restricted(load_fixture("subseq/knuth_n4.txt"), 4),
                    "restricted word, n=4");
        const Word miller5 = load_fixture("zigzag/miller_n5.txt");
        ok &= check(miller5 == miller_word(5) && miller5.max_letter() <= 6 &&
                        is_universal(miller5, 5, ContainmentMode::subsequence),
                    "15-letter word over [6], n=5");
        const Word zeta5 = load_fixture("zigzag/zeta_n5.txt");
        ok &= check(zeta5 == zeta_permutation(5).word(), "zeta_5 matches");
        ok &= check(is_universal(zeta5, 5, ContainmentMode::subsequence), "zeta_5 universal");
        ok &= check(is_universal(load_fixture("zigzag/superpattern_n6.txt"), 6,
                                 ContainmentMode::subsequence),
                    "17-letter permutation, n=6");
        ok &= check(is_rosary(load_fixture("analytics/rosary_n6_oneway.txt"), 6, false),
                    "one-way rosary, n=6");
        ok &= check(is_rosary(load_fixture("analytics/rosary_n6_twoway.txt"), 6, true),
                    "two-way rosary, n=6");
        return ok;
    });

    // 2. Exact search reproduction.
    criterion(2, "exact searches reproduce 1,3,9,33 / 1,3,7,12 / 1,3,5,9 + 13", [] {
        bool ok = true;
        const int superperm[] = {0, 1, 3, 9, 33};
        for (int n = 1; n <= 4; ++n) {
            const auto r = search_shortest_superperm(n);
            ok &= check(r.optimal_length == superperm[n] && r.exhaustive,
                        "superperm length/exhaustive");
            ok &= check(is_superpermutation(r.witness, n), "superperm witness verifies");
        }
        const int restricted[] = {0, 1, 3, 7, 12};
        for (int n = 1; n <= 4; ++n) {
            const auto r = search_shortest_restricted(n);
            ok &= check(r.optimal_length == restricted[n] && r.exhaustive,
                        "restricted length/exhaustive");
            ok &= check(is_subseq_universal_restricted(r.witness, n),
                        "restricted witness verifies");
        }
        const int superpattern[] = {0, 1, 3, 5, 9};
        for (int n = 1; n <= 4; ++n) {
            const auto r = search_shortest_superpattern(n);
            ok &= check(r.optimal_length == superpattern[n] && r.exhaustive,
                        "superpattern length/exhaustive");
            ok &= check(is_universal(r.witness, n, ContainmentMode::subsequence),
                        "superpattern witness verifies");
        }
        const auto five = search_shortest_superpattern(5);
        ok &= check(five.optimal_length == 13 && five.witness == zeta_permutation(5).word(),
                    "n=5 length-13 witness is zeta_5");
        ok &= check(is_universal(five.witness, 5, ContainmentMode::subsequence),
                    "n=5 witness verifies");
        return ok;
    });

    // 3. Score identity.
    criterion(3, "score identity s(p)+s(p+1)=1 (exhaustive [6]^<=6 and 10^4 random [12])", [] {
        std::uint64_t violations = 0;
        std::vector<int> letters;
        const auto recurse = [&](auto&& self, int depth) -> void {
            if (!letters.empty()) {
                const Word p{std::vector<int>(letters)};
                if (score(p) + score(shift_up(p)) != 1) ++violations;
            }
            if (depth == 6) return;
            for (int x = 1; x <= 6; ++x) {
                if (!letters.empty() && letters.back() == x) continue;
                letters.push_back(x);
                self(self, depth + 1);
                letters.pop_back();
            }
        };
        recurse(recurse, 0);
        SplitMix64 rng(1914);
        for (int trial = 0; trial < 10000; ++trial) {
            const Word p = random_repetition_free_word(1 + static_cast<int>(rng.below(12)), 12, rng);
            if (score(p) + score(shift_up(p)) != 1) ++violations;
        }
        return check(violations == 0, "zero violations");
    });

    // 4. Layered characterization.
    criterion(4, "layered <=> no distant inverse-descent for |pi| <= 8; count 2^(n-1)", [] {
        bool ok = true;
        for (int n = 1; n <= 8; ++n) {
            std::uint64_t layered = 0;
            for (std::uint64_t id = 0; id < factorial_u64(n); ++id) {
                const Permutation pi = nth_permutation(n, id);
                const bool is_layered = layer_decomposition(pi).has_value();
                if (is_layered != !distant_inverse_descent(pi).has_value()) {
                    ok = false;
                    break;
                }
                if (is_layered) ++layered;
            }
            ok &= check(layered == (std::uint64_t{1} << (n - 1)), "layered count");
        }
        return ok;
    });

    // 5. zeta universality.
    criterion(5, "universal permutations up to n=8; even-n gap is exactly the decreasing", [] {
        bool ok = true;
        for (int n = 1; n <= 8; ++n) {
            const Permutation u = universal_permutation(n);
            ok &= check(static_cast<long long>(u.size()) ==
                            (static_cast<long long>(n) * n + 2) / 2,
                        "length ceil((n^2+1)/2)");
            ok &= check(is_universal(u.word(), n, ContainmentMode::subsequence),
                        "universal_permutation(n) universal");
        }
        for (int n : {2, 4, 6}) {
            const auto missing =
                missing_patterns(zeta_permutation(n).word(), n, ContainmentMode::subsequence);
            std::vector<int> dec;
            for (int v = n; v >= 1; --v) dec.push_back(v);
            ok &= check(missing.size() == 1 && missing[0] == Permutation(dec),
                        "zeta misses exactly the decreasing permutation");
        }
        return ok;
    });

    // 6. Waste accounting.
    criterion(6, "waste identities, worked prefix tags, trajectory listing", [] {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            const auto r = search_shortest_superperm(n);
            const auto wd = waste_decomposition(r.witness, n);
            ok &= check(wd.new_permutations == factorial_u64(n), "n! new permutations");
            ok &= check(wd.new_permutations + wd.wasted_total() == r.witness.size(),
                        "|w| = n! + wasted");
            if (n >= 2) {
                const long long bound = static_cast<long long>(factorial_u64(n - 1)) +
                                        static_cast<long long>(factorial_u64(n - 2)) + n - 3;
                ok &= check(static_cast<long long>(wd.wasted_total()) >= bound,
                            "wasted >= trajectory bound");
            }
        }
        const auto wd = waste_decomposition(parse_word("123451234152314"), 5);
        ok &= check(wd.positions[9].tag == LetterTag::wasted_leave_class,
                    "position 10 leaves a completed class");
        ok &= check(wd.positions[13].tag == LetterTag::wasted_change_trajectory,
                    "position 14 changes trajectory");
        const char* expected[] = {
            "12345", "23451", "34512", "45123", "51234", "23415", "34152", "41523",
            "15234", "52341", "34125", "41253", "12534", "25341", "53412", "41235",
            "12354", "23541", "35412", "54123",
        };
        const auto t = trajectory(parse_permutation("12345"));
        ok &= check(t.visits.size() == 20, "20 visits");
        for (std::size_t i = 0; i < 20; ++i)
            ok &= t.visits[i] == parse_permutation(expected[i]);
        ok &= check(ok, "trajectory reproduces the worked listing");
        return ok;
    });

    // 7. Formula agreement.
    criterion(7, "closed formulas against enumeration; bound tables at n=6,7", [] {
        bool ok = true;
        for (int m = 5; m <= 9; ++m) {
            std::uint64_t hits = 0;
            const std::int64_t total = static_cast<std::int64_t>(factorial_u64(m));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : hits)
#endif
            for (std::int64_t id = 0; id < total; ++id)
                if (is_universal_serial(nth_permutation(m, static_cast<std::uint64_t>(id)).word(),
                                        3, ContainmentMode::subsequence))
                    ++hits;
            ok &= check(simion_schmidt_count(m) == bigint(hits), "count formula matches brute force");
        }
        const auto enumerate = [](int n, int k) {
            std::uint64_t length = 1;
            for (int i = 0; i < n; ++i) length *= static_cast<std::uint64_t>(k);
            std::uint64_t hits = 0;
            std::vector<int> letters(length, 1);
            while (true) {
                if (is_debruijn(CyclicWord(Word(letters)), n, k)) ++hits;
                std::size_t i = 0;
                while (i < letters.size() && letters[i] == k) letters[i++] = 1;
                if (i == letters.size()) break;
                ++letters[i];
            }
            return bigint(hits / length);
        };
        ok &= check(enumerate(2, 2) == debruijn_count(2, 2), "count (2,2)");
        ok &= check(enumerate(3, 2) == debruijn_count(3, 2), "count (3,2)");
        ok &= check(enumerate(2, 3) == debruijn_count(2, 3), "count (2,3)");

        const auto b6 = superperm_bounds(6);
        ok &= check(b6.record_upper == 872 && b6.upper_egan == 873, "n=6 slots 872/873");
        const auto b7 = superperm_bounds(7);
        ok &= check(b7.lower_trajectory == 5884 && b7.lower_trajectory_plus_one == 5885 &&
                        b7.record_upper == 5906 && b7.upper_egan == 5908,
                    "n=7 slots 5884/5885/5906/5908");
        return ok;
    });

    // 8. Statistical reproduction of the threshold table.
    criterion(8, "t(3)=7 exact; t(4)=13, t(5)=20 (4x10^4 samples, seed 42, 99% band)", [] {
        bool ok = true;
        ok &= check(t_threshold(3, 100, 42) == 7, "t(3) = 7 (enumerated exactly)");

        // 99% interval logic: where the table value is t, the sampled
        // proportion at t must clear 1/2 (or fall below it at t-1) by more
        // than z = 2.576 standard errors wherever the underlying proportion
        // is far from 1/2; the crossing itself is pinned by the seed.
        const std::uint64_t samples = 40000, seed = 42;
        const auto sample = [&](int n, int m) {
            return estimate_universal_proportion(n, m, samples, seed);
        };
        const auto clears_half = [&](const ProportionEstimate& e, bool above) {
            const double se =
                std::sqrt(e.proportion * (1 - e.proportion) / static_cast<double>(e.samples));
            return above ? e.proportion - 2.576 * se > 0.5 : e.proportion + 2.576 * se < 0.5;
        };
        ok &= check(t_threshold(4, samples, seed) == 13, "t(4) = 13");
        ok &= check(clears_half(sample(4, 11), false), "n=4: CI below 1/2 at m=11");
        ok &= check(clears_half(sample(4, 13), true), "n=4: CI above 1/2 at m=13");
        ok &= check(t_threshold(5, samples, seed) == 20, "t(5) = 20");
        ok &= check(clears_half(sample(5, 18), false), "n=5: CI below 1/2 at m=18");
        ok &= check(clears_half(sample(5, 20), true), "n=5: CI above 1/2 at m=20");
        return ok;
    });

    // 9. Adversary bound.
    criterion(9, "adversary end position >= n(n+1)/2 on universal words over [n]", [] {
        bool ok = true;
        const auto bound_holds = [&](const Word& w, int n) {
            const auto a = greedy_adversary(w, n);
            return a.contained && a.end_index >= n * (n + 1) / 2;
        };
        ok &= check(bound_holds(load_fixture("subseq/knuth_n3.txt"), 3), "n=3 fixture");
        ok &= check(bound_holds(load_fixture("subseq/knuth_n4.txt"), 4), "n=4 fixture");
        for (int n = 1; n <= 4; ++n) {
            const auto r = search_shortest_restricted(n);
            ok &= check(bound_holds(r.witness, n), "search witness");
        }
        // And on every universal word over [n] found by scanning short hosts.
        SplitMix64 rng(9);
        for (int trial = 0; trial < 2000; ++trial) {
            const int n = 2 + static_cast<int>(rng.below(2));
            const Word w = random_word(n * (n + 1) / 2 + static_cast<int>(rng.below(6)), n, rng);
            if (is_subseq_universal_restricted(w, n)) ok &= bound_holds(w, n);
        }
        return check(ok, "zero violations");
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures == 0 ? 0 : 1;
}
