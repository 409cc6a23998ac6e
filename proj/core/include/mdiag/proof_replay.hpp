#pragma once

#include <string>
#include <vector>

#include "mdiag/cycle_expr.hpp"

namespace mdiag {

struct ReplayStep {
  std::string label;
  bool ok = false;
  /// Nonzero residue (printed) when the step fails.
  std::string witness;
};

struct ReplayResult {
  std::vector<ReplayStep> steps;
  bool ok() const;
  /// First failing step rendered as "label: witness", or empty.
  std::string failure() const;
};

/// Variety for double-cover replays: point symbols a, b (b on the branch
/// locus, invariant), an involution and cover degree 2.
ModelPtr double_cover_variety();

/// Replays the vanishing of Gamma^{2m-1}(X, b) for a double cover X -> Y with
/// Gamma^m(Y, a) = 0:
///   expand  2^N Gamma^{1,N}(X,b) = prod_i (A_{0i} + Delta^-_{0i}),  A = twisted PiDiag(0,i;b)
///   pair    Delta^-_{0i} Delta^-_{0j} = A_{0i} Delta^-_{ij}, adjacent leftovers left to right
///   ideal   every word with R != {} carries >= m factors A and lies in the hypothesis ideal
///   skew    the survivor prod Delta^-_{0i} is odd under iota on factor 0, so p_* kills it
///   project p_* of the left side is 2^N Gamma^N(X,b).
/// N = 2m - 1.
ReplayResult replay_double_cover(int m);

/// alpha_k prod_{i<=k} Delta_{0i} == Sigma_k modulo PiDiag(0,.) for a
/// degree-d cover. For k >= d this is the pair (recursion-only reduction,
/// Sigma_k -> 0).
ReplayResult sigma_claim(int k, int d);

/// alpha_k Gamma^{1,k}(X,b) == Sigma_k^b modulo the twisted PiDiagonals at 0.
ReplayResult sigma_b_claim(int k, int d);

/// Sigma_d^b reduces to 0 under cover_degree(d).
ReplayResult sigma_b_vanishing(int d);

}  // namespace mdiag
