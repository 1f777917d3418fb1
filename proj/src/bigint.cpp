#include "upw/bigint.hpp"

#include <stdexcept>

namespace upw {

bigint factorial_big(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    bigint f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

bigint binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    bigint b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= (n - k + i);
        b /= i;
    }
    return b;
}

bigint pow_big(const bigint& base, std::uint64_t exp) {
    bigint result = 1, b = base;
    while (exp) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

bigint catalan_big(int m) { return binomial_big(2 * m, m) / (m + 1); }

bigint fibonacci_big(int m) {
    if (m < 0) throw std::invalid_argument("fibonacci of negative");
    bigint a = 1, b = 1;  // F(0), F(1)
    for (int i = 2; i <= m; ++i) {
        bigint c = a + b;
        a = b;
        b = c;
    }
    return m == 0 ? a : b;
}

}  // namespace upw
