#include "upw/analytics.hpp"

#include <algorithm>
#include <numeric>

#include "upw/containment.hpp"
#include "upw/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace upw {

bigint simion_schmidt_count(int m) {
    if (m < 5) throw precondition_error("simion_schmidt_count: formula valid for m >= 5");
    return factorial_big(m) - 6 * catalan_big(m) + 5 * pow_big(2, static_cast<std::uint64_t>(m)) +
           4 * binomial_big(m, 2) - 2 * fibonacci_big(m) - 14 * m + 20;
}

int arratia_min_length(int n) {
    if (n < 1) throw precondition_error("arratia_min_length: n must be positive");
    const bigint target = factorial_big(n);
    int m = n;
    while (binomial_big(m, n) < target) ++m;
    return m;
}

namespace {

bool universal_host(const Permutation& host, int n) {
    return is_universal_serial(host.word(), n, ContainmentMode::subsequence);
}

template <bool Parallel>
ProportionEstimate estimate_impl(int n, int m, std::uint64_t samples, std::uint64_t seed,
                                 std::uint64_t exact_cap) {
    if (n < 1 || m < 0) throw precondition_error("estimate: n >= 1 and m >= 0 required");
    if (n > max_pattern_length) throw precondition_error("estimate: pattern length above supported cap");
    if (samples < 1) throw precondition_error("estimate: samples must be positive");
    ProportionEstimate est;
    est.n = n;
    est.m = m;
    est.seed = seed;
    if (m < n) {  // too short to contain any pattern of length n
        est.exact = true;
        est.samples = factorial_u64(m);
        est.proportion = 0.0;
        return est;
    }

    const std::uint64_t space = m <= 20 ? factorial_u64(m) : ~std::uint64_t{0};
    if (space <= exact_cap) {
        est.exact = true;
        est.samples = space;
        std::uint64_t hits = 0;
        const std::int64_t total = static_cast<std::int64_t>(space);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : hits) if (Parallel)
#endif
        for (std::int64_t id = 0; id < total; ++id)
            if (universal_host(nth_permutation(m, static_cast<std::uint64_t>(id)), n)) ++hits;
        est.hits = hits;
        est.proportion = static_cast<double>(hits) / static_cast<double>(space);
        return est;
    }

    est.samples = samples;
    std::uint64_t hits = 0;
    const std::int64_t total = static_cast<std::int64_t>(samples);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : hits) if (Parallel)
#endif
    for (std::int64_t i = 0; i < total; ++i) {
        SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(m),
                                      static_cast<std::uint64_t>(i)));
        if (universal_host(random_permutation(m, rng), n)) ++hits;
    }
    est.hits = hits;
    est.proportion = static_cast<double>(hits) / static_cast<double>(samples);
    return est;
}

}  // namespace

ProportionEstimate estimate_universal_proportion(int n, int m, std::uint64_t samples,
                                                 std::uint64_t seed, std::uint64_t exact_cap) {
    return estimate_impl<true>(n, m, samples, seed, exact_cap);
}

ProportionEstimate estimate_universal_proportion_serial(int n, int m, std::uint64_t samples,
                                                        std::uint64_t seed,
                                                        std::uint64_t exact_cap) {
    return estimate_impl<false>(n, m, samples, seed, exact_cap);
}

int t_threshold(int n, std::uint64_t samples, std::uint64_t seed, std::uint64_t exact_cap) {
    for (int m = n;; ++m) {
        const auto est = estimate_universal_proportion(n, m, samples, seed, exact_cap);
        if (est.proportion >= 0.5) return m;
        if (m > 4 * n * n + 16)
            throw std::logic_error("t_threshold: no crossing found in a plausible range");
    }
}

bool is_rosary(const Word& w, int n, bool bidirectional) {
    if (n < 1) throw precondition_error("is_rosary: n must be positive");
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > n) throw precondition_error("is_rosary: letters must lie in [n]");
    if (w.empty()) return n == 0;

    std::vector<std::vector<int>> readings;
    const auto add_rotations = [&](const std::vector<int>& base) {
        for (std::size_t k = 0; k < base.size(); ++k) {
            std::vector<int> lin(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
            lin.insert(lin.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
            readings.push_back(std::move(lin));
        }
    };
    add_rotations(w.letters());
    if (bidirectional) {
        std::vector<int> rev(w.letters().rbegin(), w.letters().rend());
        add_rotations(rev);
    }

    // Over [n] pattern containment of a permutation is literal containment,
    // so a greedy per-reading matcher suffices.
    const auto contains_literally = [](const std::vector<int>& lin, const Permutation& p) {
        std::size_t pos = 0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            while (pos < lin.size() && lin[pos] != p[j]) ++pos;
            if (pos == lin.size()) return false;
            ++pos;
        }
        return true;
    };

    const std::uint64_t total = factorial_u64(n);
    for (std::uint64_t id = 0; id < total; ++id) {
        const Permutation p = nth_permutation(n, id);
        const bool found = std::any_of(readings.begin(), readings.end(),
                                       [&](const auto& lin) { return contains_literally(lin, p); });
        if (!found) return false;
    }
    return true;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Rational reduced(long long num, long long den) {
    const long long g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

}  // namespace

std::pair<Rational, Rational> gupta_bounds(int n) {
    if (n < 1) throw precondition_error("gupta_bounds: n must be positive");
    const long long n2 = static_cast<long long>(n) * n;
    return {reduced(n2, 2), reduced(3 * n2 + 4, 8)};
}

long long layered_universal_length(long long n) {
    if (n < 0) throw precondition_error("layered_universal_length: n must be nonnegative");
    int k = 0;
    while ((1LL << k) < n + 1) ++k;  // k = ceil(lg(n+1))
    return (n + 1) * k - (1LL << k) + 1;
}

}  // namespace upw
