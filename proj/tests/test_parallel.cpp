#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "test_helpers.hpp"
#include "upw/analytics.hpp"
#include "upw/containment.hpp"
#include "upw/zigzag.hpp"

using namespace upw;
using namespace upw::testing;

TEST_CASE("parallel missing_patterns equals the serial reference") {
    const std::vector<std::pair<Word, int>> hosts = {
        {zeta_permutation(6).word(), 6},
        {universal_permutation(6).word(), 6},
        {miller_word(5), 5},
        {parse_word("1213121"), 3},
        {parse_word("123121321"), 3},
    };
    for (const auto& [host, n] : hosts) {
        CHECK(missing_patterns(host, n, ContainmentMode::subsequence) ==
              missing_patterns_serial(host, n, ContainmentMode::subsequence));
        CHECK(is_universal(host, n, ContainmentMode::subsequence) ==
              is_universal_serial(host, n, ContainmentMode::subsequence));
    }
}

TEST_CASE("estimates are identical across worker counts") {
    const auto serial = estimate_universal_proportion_serial(4, 12, 400, 2024);
#ifdef _OPENMP
    const int before = omp_get_max_threads();
    for (int workers : {1, 2, 4}) {
        omp_set_num_threads(workers);
        const auto parallel = estimate_universal_proportion(4, 12, 400, 2024);
        CHECK(parallel.hits == serial.hits);
        CHECK(parallel.samples == serial.samples);
    }
    omp_set_num_threads(before);
#else
    const auto parallel = estimate_universal_proportion(4, 12, 400, 2024);
    CHECK(parallel.hits == serial.hits);
#endif
}

TEST_CASE("exact enumeration is identical across worker counts") {
    const auto serial = estimate_universal_proportion_serial(3, 7, 10, 5);
#ifdef _OPENMP
    const int before = omp_get_max_threads();
    for (int workers : {1, 2}) {
        omp_set_num_threads(workers);
        const auto parallel = estimate_universal_proportion(3, 7, 10, 5);
        CHECK(parallel.hits == serial.hits);
    }
    omp_set_num_threads(before);
#endif
    CHECK(serial.exact);
}

TEST_CASE("superpattern search result is worker-independent") {
#ifdef _OPENMP
    const int before = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = search_shortest_superpattern(4);
    omp_set_num_threads(2);
    const auto two = search_shortest_superpattern(4);
    omp_set_num_threads(before);
    CHECK(one.optimal_length == two.optimal_length);
    CHECK(one.witness == two.witness);
    CHECK(one.exhaustive == two.exhaustive);
#endif
}
