#include <doctest.h>

#include "test_helpers.hpp"
#include "upw/containment.hpp"
#include "upw/word.hpp"
#include "upw/zigzag.hpp"

using namespace upw;
using namespace upw::testing;

TEST_CASE("word construction and invariants") {
    CHECK(Word().empty());
    CHECK(Word().max_letter() == 0);
    CHECK_THROWS_AS(Word({1, 0, 2}), precondition_error);
    CHECK(Word({4, 1, 4}).max_letter() == 4);
}

TEST_CASE("permutation validation rejects instead of normalizing") {
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_THROWS_AS(Permutation({1, 1}), precondition_error);
    CHECK_THROWS_AS(Permutation({2, 3}), precondition_error);
    CHECK(Permutation().empty());
    CHECK(Permutation::identity(4) == Permutation({1, 2, 3, 4}));
}

TEST_CASE("text format parses both forms") {
    CHECK(parse_word("1 2 3") == Word({1, 2, 3}));
    CHECK(parse_word("1,2,3") == Word({1, 2, 3}));
    CHECK(parse_word("123121321") == Word({1, 2, 3, 1, 2, 1, 3, 2, 1}));
    CHECK(parse_word("10") == Word({10}));  // zero digit forces decimal reading
    CHECK(parse_word("3 12 5") == Word({3, 12, 5}));
    CHECK(parse_word("") == Word());
    CHECK(parse_word("  7  ") == Word({7}));
    CHECK_THROWS_AS(parse_word("1 x 2"), parse_error);
    CHECK_THROWS_AS(parse_word("0"), parse_error);
    CHECK(to_compact_string(Word({1, 2, 9})) == "129");
    CHECK_THROWS_AS(to_compact_string(Word({10})), precondition_error);
    CHECK(display_string(Word({1, 2, 3})) == "123");
    CHECK(display_string(Word({1, 12})) == "1 12");
}

TEST_CASE("canonical form round-trips bit-exactly") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int len = static_cast<int>(rng.below(13));
        const Word w = random_word(len, 15, rng);
        CHECK(parse_word(to_string(w)) == w);
        if (!w.empty() && w.max_letter() <= 9) CHECK(parse_word(to_compact_string(w)) == w);
    }
}

TEST_CASE("order_isomorphic matches the definition") {
    CHECK(order_isomorphic(Word(), Word()));
    // Equal letters in z5 break the equivalence against zeta5.
    CHECK_FALSE(order_isomorphic(zigzag_word(5), zeta_permutation(5).word()));
    CHECK(order_isomorphic(Word({2, 5, 3}), Word({1, 9, 4})));
    CHECK_FALSE(order_isomorphic(Word({1, 2}), Word({1})));
    CHECK_FALSE(order_isomorphic(Word({1, 1}), Word({1, 2})));
}

TEST_CASE("order_homomorphic lets ties break but not form") {
    CHECK(order_homomorphic(zigzag_word(5), zeta_permutation(5).word()));
    CHECK(order_homomorphic(Word({1, 1}), Word({2, 1})));
    CHECK_FALSE(order_homomorphic(Word({2, 1}), Word({1, 1})));
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Word u = random_word(1 + static_cast<int>(rng.below(10)), 6, rng);
        CHECK(order_isomorphic(u, u));
        CHECK(order_homomorphic(u, u));
    }
}

TEST_CASE("isomorphism implies homomorphism both ways") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const Word u = random_word(6, 5, rng);
        const Word v = random_word(6, 5, rng);
        if (order_isomorphic(u, v)) {
            CHECK(order_homomorphic(u, v));
            CHECK(order_homomorphic(v, u));
        }
    }
}

TEST_CASE("contains_factor returns the leftmost window") {
    const auto w = contains_factor(parse_word("123121321"), parse_permutation("312"));
    REQUIRE(w.has_value());
    CHECK(w->indices == std::vector<int>{3, 4, 5});
    CHECK_FALSE(contains_factor(Word(), parse_permutation("1")).has_value());
    const auto w2 = contains_factor(parse_word("121"), parse_permutation("12"));
    REQUIRE(w2.has_value());
    CHECK(w2->indices == std::vector<int>{1, 2});
}

TEST_CASE("contains_pattern returns the least witness") {
    const auto w = contains_pattern(parse_word("1213121"), parse_permutation("321"));
    REQUIRE(w.has_value());
    CHECK(w->indices == std::vector<int>{4, 6, 7});
    CHECK(extract(parse_word("1213121"), *w) == Word({3, 2, 1}));

    const auto single = contains_pattern(parse_word("4 4 2"), parse_permutation("1"));
    REQUIRE(single.has_value());
    CHECK(single->indices == std::vector<int>{1});

    CHECK(contains_pattern(zeta_permutation(5).word(), parse_permutation("54321")).has_value());

    // Empty pattern is contained everywhere with the empty witness.
    const auto empty = contains_pattern(Word(), Permutation());
    REQUIRE(empty.has_value());
    CHECK(empty->indices.empty());
}

TEST_CASE("pattern witness agrees with subset enumeration oracle") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 400; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(10));
        const int n = 1 + static_cast<int>(rng.below(4));
        const Word host = random_word(m, 5, rng);
        const Permutation pattern = nth_permutation(n, rng.below(factorial_u64(n)));
        const auto fast = contains_pattern(host, pattern);
        const auto naive = naive_pattern_witness(host, pattern);
        CHECK(fast.has_value() == naive.has_value());
        if (fast && naive) CHECK(fast->indices == *naive);
    }
}

TEST_CASE("factor containment implies subsequence containment") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const Word host = random_word(8, 4, rng);
        const Permutation pattern = nth_permutation(3, rng.below(6));
        if (contains_factor(host, pattern)) CHECK(contains_pattern(host, pattern).has_value());
    }
}

TEST_CASE("missing_patterns drives both modes") {
    CHECK(missing_patterns(parse_word("123121321"), 3, ContainmentMode::factor).empty());

    const auto missing = missing_patterns(parse_word("12312"), 3, ContainmentMode::factor);
    REQUIRE(missing.size() == 3);
    CHECK(missing[0] == parse_permutation("132"));
    CHECK(missing[1] == parse_permutation("213"));
    CHECK(missing[2] == parse_permutation("321"));

    const auto gap = missing_patterns(zeta_permutation(4).word(), 4, ContainmentMode::subsequence);
    REQUIRE(gap.size() == 1);
    CHECK(gap[0] == parse_permutation("4321"));

    CHECK_THROWS_AS(missing_patterns(Word(), 0, ContainmentMode::factor), precondition_error);
}

TEST_CASE("break_ties_decreasing") {
    CHECK(break_ties_decreasing(zigzag_word(5)) == zeta_permutation(5));
    CHECK(break_ties_decreasing(Word({1, 1, 1})) == Permutation({3, 2, 1}));
    CHECK_THROWS_AS(break_ties_decreasing(Word()), precondition_error);

    SplitMix64 rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        const int len = 1 + static_cast<int>(rng.below(10));
        const Word w = random_word(len, 6, rng);
        const Permutation p = break_ties_decreasing(w);
        CHECK(order_homomorphic(w, p.word()));
        // Permutations are fixed points.
        CHECK(break_ties_decreasing(p.word()) == p);
        // Equal letters become decreasing entries.
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] == w[j]) CHECK(p[i] > p[j]);
    }
}

TEST_CASE("containment transports along order homomorphisms") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 200; ++trial) {
        const int len = 3 + static_cast<int>(rng.below(8));
        const Word u = random_word(len, 4, rng);
        const Word v = break_ties_decreasing(u).word();
        const Permutation pattern = nth_permutation(3, rng.below(6));
        const auto witness = contains_pattern(u, pattern);
        if (!witness) continue;
        CHECK(order_isomorphic(extract(v, *witness), pattern.word()));
    }
}

TEST_CASE("permutation indexing round-trips in lexicographic order") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = factorial_u64(n);
        Permutation prev;
        for (std::uint64_t id = 0; id < total; ++id) {
            const Permutation p = nth_permutation(n, id);
            CHECK(permutation_index(p) == id);
            if (id > 0) CHECK(prev < p);
            prev = p;
        }
    }
    CHECK(factorial_u64(0) == 1);
    CHECK(factorial_u64(10) == 3628800);
}

TEST_CASE("pattern_of normalizes windows") {
    const std::vector<int> win{3, 9, 4};
    CHECK(pattern_of(win) == Permutation({1, 3, 2}));
    const std::vector<int> dup{3, 3};
    CHECK_FALSE(pattern_of(dup).has_value());
}
