// Compares the OpenMP kernels against their serial reference
// implementations: pattern-set verification, proportion sampling /
// enumeration, and the superpattern level scan that rides on them.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "upw/analytics.hpp"
#include "upw/containment.hpp"
#include "upw/zigzag.hpp"

using namespace upw;

namespace {

double time_ms(const std::function<void()>& body, int repetitions = 3) {
    double best = 1e30;
    for (int r = 0; r < repetitions; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (ms < best) best = ms;
    }
    return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-38s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-38s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const Word host = universal_permutation(8).word();
        row("pattern-set scan (n=8, host 33)",
            time_ms([&] { missing_patterns_serial(host, 8, ContainmentMode::subsequence); }, 2),
            time_ms([&] { missing_patterns(host, 8, ContainmentMode::subsequence); }, 2));
    }
    {
        const Word host = zeta_permutation(7).word();
        row("universality check (n=7, host 25)",
            time_ms([&] { is_universal_serial(host, 7, ContainmentMode::subsequence); }),
            time_ms([&] { is_universal(host, 7, ContainmentMode::subsequence); }));
    }
    row("proportion sampling (n=5, m=20, 2e4)",
        time_ms([&] { estimate_universal_proportion_serial(5, 20, 20000, 1, 1); }, 2),
        time_ms([&] { estimate_universal_proportion(5, 20, 20000, 1, 1); }, 2));
    row("exact enumeration (n=4, m=9)",
        time_ms([&] { estimate_universal_proportion_serial(4, 9, 1, 1); }, 2),
        time_ms([&] { estimate_universal_proportion(4, 9, 1, 1); }, 2));
    {
#ifdef _OPENMP
        const int before = omp_get_max_threads();
        omp_set_num_threads(1);
        const double serial = time_ms([] { search_shortest_superpattern(4); }, 2);
        omp_set_num_threads(before);
        const double parallel = time_ms([] { search_shortest_superpattern(4); }, 2);
        row("superpattern level scan (n=4)", serial, parallel);
#else
        const double serial = time_ms([] { search_shortest_superpattern(4); }, 2);
        row("superpattern level scan (n=4)", serial, serial);
#endif
    }
    return 0;
}
