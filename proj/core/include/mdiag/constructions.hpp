#pragma once

#include <span>
#include <string>
#include <vector>

#include "mdiag/cycle_expr.hpp"
#include "mdiag/rewrite.hpp"

namespace mdiag {

/// prod_{i in I} s_i on X^arity.
CycleExpr star_power(int arity, ModelPtr model, const std::string& s, std::span<const int> I);

/// Delta_J as the star prod_{j in J, j != min J} Delta_{min J, j}; a singleton gives 1.
CycleExpr small_diagonal(int arity, ModelPtr model, std::span<const int> J);

/// Gamma^m(X, s) on X^m: sum over proper subsets I of (-1)^|I| s^{*I} * Delta_{complement}.
CycleExpr gamma_m(int m, const std::string& s, ModelPtr model);

/// Gamma^{1,m}(X, s) on X^{m+1}: prod_{i=1..m} (Delta_{0i} - s_i), factor 0 distinguished.
CycleExpr gamma_1m(int m, const std::string& s, ModelPtr model);

/// Delta_ij + sign * InvolGraph_ij. Needs a model with an involution.
CycleExpr delta_pm(int arity, ModelPtr model, int i, int j, int sign);

/// Formal expansion of Sigma_k^b on X^{k+1}:
/// sum_{I subset {1..k}} (-1)^{k-|I|} lambda_{k,|I|,d} Sigma_{|I|}(0,I) * s^{*J}.
CycleExpr sigma_b_expansion(int k, int d, const std::string& s, ModelPtr model);

/// Delta_ij - pt_i - pt_j - K_i K_j / deg(K^2); without the K term when the
/// model has no canonical symbol.
CycleExpr delta0(int arity, ModelPtr model, int i, int j, const std::string& point = "pt",
                 const std::string& canonical = "K");

/// sum_{sigma in S_{M+1}} sign(sigma) prod_{i=0..M} delta0(i, M+1+sigma(i)) on X^{2M+2}.
CycleExpr kimura_class(int M, ModelPtr model, const std::string& point = "pt", const std::string& canonical = "K");

/// iota^* acting on factor `index`: Delta <-> InvolGraph for generators at
/// that factor; invariant points and PiDiagonals are fixed. Sigma and
/// divisors are rejected.
CycleExpr involution_pullback(const CycleExpr& e, int index, const std::set<std::string>& invariant);

/// p_* forgetting factor 0, short-circuiting to 0 when iota_0^* e reduces to -e.
CycleExpr involution_oddness_pushforward(const CycleExpr& e, const RelationSet& rs);

}  // namespace mdiag
