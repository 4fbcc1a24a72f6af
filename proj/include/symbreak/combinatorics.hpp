#pragma once

#include <cstdint>

namespace symbreak {

// Exact counts. Every function throws OverflowError rather than wrap, and
// InvalidArgument on negative arguments.
using Count = std::int64_t;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
Count checked_pow(Count base, int exp);

// C(k, n); zero when n > k.
Count binomial(Count k, Count n);
// Stirling number of the second kind: partitions of n items into k blocks.
Count stirling2(int n, int k);
Count factorial(int n);
// k (k-1) ... (k-j+1).
Count falling_factorial(Count k, int j);

}  // namespace symbreak
