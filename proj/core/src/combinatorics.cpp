#include "mdiag/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace mdiag::combinatorics {

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer alt_power_sum(unsigned d, unsigned s) {
  if (d < 1) throw std::invalid_argument("alt_power_sum: d must be >= 1");
  Integer sum = 0;
  for (unsigned k = 1; k <= d + 1; ++k) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), k, 2 + s);
    term *= binomial(d + 1, k);
    if ((d + 1 - k) % 2 == 1) sum -= term;
    else sum += term;
  }
  return sum;
}

Integer stirling2(unsigned m, unsigned n) {
  // row[j] = S(i, j) while sweeping i = 0..m
  std::vector<Integer> row(n + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = std::min(i, n); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[n];
}

Integer alpha(unsigned k) {
  Integer f = factorial(k);
  return k % 2 == 0 ? f : Integer(-f);
}

Integer lambda(unsigned k, unsigned i, long d) {
  if (i > k) throw std::invalid_argument("lambda: requires i <= k");
  Integer r = 1;
  for (unsigned t = i + 1; t <= k; ++t) r *= d - static_cast<long>(t);
  return r;
}

}  // namespace mdiag::combinatorics
