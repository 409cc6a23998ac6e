#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mdiag/generator.hpp"
#include "mdiag/rational.hpp"
#include "mdiag/variety.hpp"

namespace mdiag {

/// Commutative product of generators, kept as a sorted multiset.
/// The sorted generator list is the canonical key.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  int codim(int n) const;
  int max_index() const;

  Monomial operator*(const Monomial& other) const;
  /// Generators at all positions except the (sorted, distinct) `positions`.
  Monomial without(std::span<const std::size_t> positions) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Generator> gens_;
};

using Term = std::pair<Monomial, Rational>;

/// Homogeneous Q-linear combination of monomials on X^m.
///
/// Always canonical: equal monomials merged, zero coefficients dropped,
/// monomials ordered by their canonical key. Construction rejects mixed
/// codimension, out-of-range indices and symbols of the wrong role.
class CycleExpr {
 public:
  using Terms = std::map<Monomial, Rational>;

  CycleExpr(int arity, ModelPtr model);

  /// canonicalize(): builds the canonical expression from an arbitrary term list.
  static CycleExpr from_terms(int arity, ModelPtr model, std::span<const Term> terms);
  static CycleExpr one(int arity, ModelPtr model);
  static CycleExpr generator(int arity, ModelPtr model, Generator g, Rational coefficient = 1);

  int arity() const { return arity_; }
  const ModelPtr& model() const { return model_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Codimension shared by all monomials; nullopt for the zero expression.
  std::optional<int> codim() const;

  Rational coefficient(const Monomial& m) const;

  CycleExpr& operator+=(const CycleExpr& other);
  CycleExpr& operator-=(const CycleExpr& other);
  CycleExpr& operator*=(const Rational& scalar);
  /// Adds c * m, checking the monomial against arity, model and codimension.
  void add_term(const Monomial& m, const Rational& c);

  friend CycleExpr operator+(CycleExpr a, const CycleExpr& b) { return a += b; }
  friend CycleExpr operator-(CycleExpr a, const CycleExpr& b) { return a -= b; }
  friend CycleExpr operator*(CycleExpr a, const Rational& s) { return a *= s; }
  friend CycleExpr operator*(const Rational& s, CycleExpr a) { return a *= s; }
  CycleExpr operator-() const;

  /// Same arity, same model, same terms.
  bool operator==(const CycleExpr& other) const;

 private:
  void check_compatible(const CycleExpr& other, const char* op) const;
  void check_monomial(const Monomial& m) const;

  int arity_;
  ModelPtr model_;
  Terms terms_;
};

/// Free product of the commutative generator ring (multiset union); no relation applied.
CycleExpr mul(const CycleExpr& a, const CycleExpr& b);
CycleExpr operator*(const CycleExpr& a, const CycleExpr& b);

/// Product of a list of expressions on the same X^m (empty list: requires arity/model).
CycleExpr product(std::span<const CycleExpr> factors);

CycleExpr canonicalize(const CycleExpr& e);

/// p^* along the projection X^m -> X^k described by an injective `placement`
/// {0..k-1} -> {0..m-1}: factor t of X^k becomes factor placement[t] of X^m.
CycleExpr pullback(const CycleExpr& e, std::span<const int> placement, int m);

/// Relabels factor i as factor sigma[i]. sigma must be a permutation of {0..m-1}.
CycleExpr permute(const CycleExpr& e, std::span<const int> sigma);

/// Capabilities pushforward_forget may use to bring a monomial to i-cleared
/// form. Only trivial transport/shuffle moves are ever applied.
struct ClearingRules {
  /// Transport across Diagonal(i,j): G(..i..) * Delta_ij = G(..j..) * Delta_ij.
  bool diagonal_transport = true;
  /// Transport across InvolGraph(i,j), acting by the involution on the moved generator.
  bool involution_transport = false;
  /// Point symbols fixed by the involution (may cross an InvolGraph).
  std::set<std::string> invariant_symbols;
  /// Cover degree used for lone PiDiagonal/Sigma factors.
  std::optional<int> cover_degree;
};

/// p_* along the projection forgetting factor i; remaining factors renumbered
/// order-preservingly. See functorial.cpp for the per-monomial rules.
CycleExpr pushforward_forget(const CycleExpr& e, int i, const ClearingRules& rules);

/// The i-cleared form of one monomial (index i in at most one generator).
/// nullopt when a trivial vanishing (point times unary class on factor i)
/// kills the monomial; NotClearedError when no trivial move clears it.
std::optional<Monomial> clear_index(const Monomial& m, int i, const ClearingRules& rules);

}  // namespace mdiag
