#pragma once

#include "mdiag/rational.hpp"

namespace mdiag::combinatorics {

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// sum_{k=1}^{d+1} (-1)^{d+1-k} C(d+1,k) k^{2+s}, evaluated by direct summation.
/// Vanishes exactly when s <= d - 2.
Integer alt_power_sum(unsigned d, unsigned s);

/// Stirling numbers of the second kind from the recurrence
/// S(m,n) = n S(m-1,n) + S(m-1,n-1). Shares no code with alt_power_sum.
Integer stirling2(unsigned m, unsigned n);

/// (-1)^k k!, the scalar with alpha_k * prod_i Delta_{0i} = Sigma_k mod E_k.
Integer alpha(unsigned k);

/// Degree (d-i-1)(d-i-2)...(d-k) of the projection Sigma_k -> Sigma_i.
/// Empty product (i == k) is 1. Requires i <= k.
Integer lambda(unsigned k, unsigned i, long d);

}  // namespace mdiag::combinatorics
