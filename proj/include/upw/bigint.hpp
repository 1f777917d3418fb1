#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace upw {

using bigint = boost::multiprecision::cpp_int;

bigint factorial_big(int n);
bigint binomial_big(int n, int k);
bigint pow_big(const bigint& base, std::uint64_t exp);

/// m-th Catalan number.
bigint catalan_big(int m);

/// Combinatorial Fibonacci numbers: F(0) = F(1) = 1.
bigint fibonacci_big(int m);

}  // namespace upw
