#include <doctest.h>

#include <functional>
#include <vector>

#include "mdiag/combinatorics.hpp"

using namespace mdiag;
using namespace mdiag::combinatorics;

namespace {

// Pascal's triangle, independent of the library's binomial.
Integer pascal(unsigned n, unsigned k) {
  std::vector<Integer> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1);
    next[0] = next[i] = 1;
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return k <= n ? row[k] : Integer(0);
}

// Counts set partitions of {0..m-1} into exactly n blocks by enumerating
// restricted growth strings.
long brute_stirling(int m, int n) {
  long count = 0;
  std::vector<int> a(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == m) {
      count += blocks == n;
      return;
    }
    for (int b = 0; b <= blocks && b < n; ++b) {
      a[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (m == 0) return n == 0;
  rec(0, 0);
  return count;
}

Integer direct_sum(unsigned d, unsigned s) {
  Integer total = 0;
  for (unsigned k = 1; k <= d + 1; ++k) {
    Integer p = 1;
    for (unsigned e = 0; e < 2 + s; ++e) p *= k;
    Integer term = pascal(d + 1, k) * p;
    total += (d + 1 - k) % 2 ? Integer(-term) : term;
  }
  return total;
}

}  // namespace

TEST_CASE("alt_power_sum small values") {
  CHECK(alt_power_sum(2, 0) == 0);
  CHECK(alt_power_sum(2, 1) == 6);
  CHECK(alt_power_sum(1, 0) == 2);
}

TEST_CASE("alt_power_sum agrees with an independent summation") {
  for (unsigned d = 1; d <= 12; ++d)
    for (unsigned s = 0; s <= 2 * d; ++s) CHECK(alt_power_sum(d, s) == direct_sum(d, s));
}

TEST_CASE("alt_power_sum vanishes exactly for s <= d - 2") {
  for (unsigned d = 1; d <= 12; ++d)
    for (unsigned s = 0; s <= 2 * d; ++s) CHECK((alt_power_sum(d, s) == 0) == (s + 2 <= d));
}

TEST_CASE("stirling2") {
  CHECK(stirling2(3, 2) == 3);
  for (unsigned n = 0; n <= 10; ++n) CHECK(stirling2(n, n) == 1);
  CHECK(stirling2(5, 0) == 0);
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= m; ++n) CHECK(stirling2(m, n) == brute_stirling(m, n));
}

TEST_CASE("alt_power_sum equals (d+1)! S(s+2, d+1)") {
  for (unsigned d = 1; d <= 10; ++d)
    for (unsigned s = 0; s <= 20; ++s) CHECK(alt_power_sum(d, s) == factorial(d + 1) * stirling2(s + 2, d + 1));
}

TEST_CASE("binomial and factorial") {
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) CHECK(binomial(n, k) == pascal(n, k));
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("alpha") {
  CHECK(alpha(0) == 1);
  CHECK(alpha(1) == -1);
  CHECK(alpha(3) == -6);
  for (unsigned k = 0; k < 15; ++k) CHECK(alpha(k + 1) == -Integer(k + 1) * alpha(k));
}

TEST_CASE("lambda") {
  CHECK(lambda(2, 0, 3) == 2);
  CHECK(lambda(1, 0, 2) == 1);
  for (unsigned k = 0; k <= 6; ++k)
    for (long d = 1; d <= 8; ++d) CHECK(lambda(k, k, d) == 1);
  // a factor (d - j) with i < j <= k hits zero once d <= k
  for (unsigned k = 1; k <= 6; ++k)
    for (long d = 1; d <= static_cast<long>(k); ++d)
      for (unsigned i = 0; i < k; ++i)
        if (static_cast<long>(i) < d) CHECK(lambda(k, i, d) == 0);
  CHECK(lambda(3, 0, 6) == 5 * 4 * 3);
}
