#include "symbreak/combinatorics.hpp"

#include <string>
#include <vector>

#include "symbreak/error.hpp"

namespace symbreak {

namespace {

void require_non_negative(Count v, const char* what) {
  if (v < 0) throw InvalidArgument(std::string(what) + ": negative argument");
}

}  // namespace

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in product");
  return out;
}

Count checked_pow(Count base, int exp) {
  require_non_negative(exp, "checked_pow");
  Count out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

Count binomial(Count k, Count n) {
  require_non_negative(k, "binomial");
  require_non_negative(n, "binomial");
  if (n > k) return 0;
  if (n > k - n) n = k - n;
  __int128 acc = 1;
  for (Count i = 0; i < n; ++i) {
    // acc * (k - i) / (i + 1) stays integral: it is C(k, i + 1).
    acc = acc * (k - i) / (i + 1);
    if (acc > INT64_MAX) throw OverflowError("binomial coefficient exceeds 64 bits");
  }
  return static_cast<Count>(acc);
}

Count stirling2(int n, int k) {
  require_non_negative(n, "stirling2");
  require_non_negative(k, "stirling2");
  if (k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  // row[j] = S(i, j), built up with S(i+1, j) = j S(i, j) + S(i, j-1).
  std::vector<Count> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = checked_add(checked_mul(j, row[j]), row[j - 1]);
    }
    row[0] = 0;
  }
  return row[k];
}

Count factorial(int n) {
  require_non_negative(n, "factorial");
  Count out = 1;
  for (int i = 2; i <= n; ++i) out = checked_mul(out, i);
  return out;
}

Count falling_factorial(Count k, int j) {
  require_non_negative(k, "falling_factorial");
  require_non_negative(j, "falling_factorial");
  Count out = 1;
  for (int i = 0; i < j; ++i) {
    if (k - i <= 0) return 0;
    out = checked_mul(out, k - i);
  }
  return out;
}

}  // namespace symbreak
