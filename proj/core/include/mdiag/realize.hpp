#pragma once

#include <optional>
#include <span>
#include <string>

#include "mdiag/cohom_model.hpp"
#include "mdiag/cycle_expr.hpp"
#include "mdiag/tensor_class.hpp"

namespace mdiag {

/// 1 (x) ... (x) 1.
TensorClass unit_tensor(int arity, const CohomModel& model);

/// Class v placed in slot s, units elsewhere.
TensorClass slot_class(int arity, int s, const SparseVec& v, const CohomModel& model);

/// Cup product on X^m with Koszul signs.
TensorClass multiply(const TensorClass& a, const TensorClass& b, const CohomModel& model);

/// Pushforward along the projection forgetting `slot` (integration over that factor).
TensorClass contract(const TensorClass& t, int slot, const CohomModel& model);

/// Pullback along X^m -> X^k given by an injective placement {0..k-1} -> {0..m-1}.
TensorClass pullback(const TensorClass& t, std::span<const int> placement, int m, const CohomModel& model);

/// Total degree when homogeneous; nullopt for zero.
std::optional<int> degree(const TensorClass& t, const CohomModel& model);

/// Kunneth class of the diagonal on X^2.
TensorClass diagonal_tensor(const CohomModel& model);

/// Correspondence action p_{2*}(alpha . p_1^* x) for alpha on X^2, x on X.
TensorClass apply(const TensorClass& alpha, const TensorClass& x, const CohomModel& model);

/// beta o alpha = p_{02*}(p_{01}^* alpha . p_{12}^* beta).
TensorClass compose(const TensorClass& alpha, const TensorClass& beta, const CohomModel& model);

/// Cohomology class of a generator on X^arity. Symbols are looked up in the
/// model's named classes. PiDiagonal, twisted PiDiagonal and Sigma need an
/// involution (double cover); other cover degrees are unsupported.
TensorClass realize(const Generator& g, int arity, const CohomModel& model);

/// Ring morphism from cycle expressions to H*(X^m).
TensorClass realize(const CycleExpr& e, const CohomModel& model);

/// Exact comparison with the empty tensor.
inline bool is_zero(const TensorClass& t) { return t.is_zero(); }

/// Up to `limit` terms as "c*[x|y|...]" using basis names.
std::string to_text(const TensorClass& t, const CohomModel& model, std::size_t limit = 6);

}  // namespace mdiag
