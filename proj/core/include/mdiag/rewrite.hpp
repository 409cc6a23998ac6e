#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdiag/cycle_expr.hpp"

namespace mdiag {

/// One generator of a rule's left-hand side.
///
/// Binary kinds bind two index variables; symmetric kinds match in either
/// orientation. Unary kinds bind one index variable and a symbol (variable,
/// literal, or restricted to `symbol_in`). Sigma binds its whole index tuple
/// to the rule's tuple slot, subject to [min_order, max_order].
struct GenPattern {
  GenKind kind{GenKind::Diagonal};
  std::vector<int> vars{};
  int symbol_var = -1;
  std::string symbol_literal{};
  std::vector<std::string> symbol_in{};
  int min_order = 1;
  int max_order = 1 << 20;

  static GenPattern binary(GenKind kind, int x, int y) { return {.kind = kind, .vars = {x, y}}; }
  static GenPattern diagonal(int x, int y) { return binary(GenKind::Diagonal, x, y); }
  static GenPattern invol_graph(int x, int y) { return binary(GenKind::InvolGraph, x, y); }
  static GenPattern pi_diagonal(int x, int y) { return binary(GenKind::PiDiagonal, x, y); }
  static GenPattern unary(GenKind kind, int x, int symbol_var) {
    return {.kind = kind, .vars = {x}, .symbol_var = symbol_var};
  }
  static GenPattern unary_literal(GenKind kind, int x, std::string symbol) {
    return {.kind = kind, .vars = {x}, .symbol_literal = std::move(symbol)};
  }
  static GenPattern sigma(int min_order, int max_order) {
    return {.kind = GenKind::Sigma, .min_order = min_order, .max_order = max_order};
  }
};

/// Variable assignment produced by a successful match.
struct Binding {
  std::vector<int> idx;
  std::vector<std::string> sym;
  std::vector<int> tuple;
};

/// Polynomial in generators; each entry is a product with a coefficient.
using Replacement = std::vector<std::pair<std::vector<Generator>, Rational>>;

/// Oriented rule lhs -> rhs. The matched generators are replaced by rhs,
/// the rest of the monomial is kept.
struct RewriteRule {
  std::string name;
  std::vector<GenPattern> lhs;
  int index_vars = 0;
  int symbol_vars = 0;
  /// Pairs (a, b) requiring idx[a] < idx[b].
  std::vector<std::pair<int, int>> less;
  /// Pairs (var, value) pinning an index variable.
  std::vector<std::pair<int, int>> fixed;
  std::function<Replacement(const Binding&)> rhs;
  std::string note;
};

/// Monomial ideal generator: a monomial is dropped once it contains at least
/// `min_count` generators of `kind` (with `symbol`, when set) touching
/// `anchor` (as base index for twisted PiDiagonals), counted by distinct
/// partner index.
struct DropRule {
  std::string name;
  GenKind kind{GenKind::PiDiagonal};
  std::optional<int> anchor;
  std::optional<std::string> symbol;
  int min_count = 1;

  bool matches(const Monomial& m) const;
};

struct RelationSet {
  std::string name;
  std::vector<RewriteRule> rules;
  std::vector<DropRule> drops;
  ClearingRules clearing;

  bool has_rule(const std::string& rule_name) const;
  /// Rules and drops of `other` appended (duplicates by name skipped);
  /// clearing capabilities merged.
  RelationSet& merge(const RelationSet& other);
  /// Keeps only the rules whose name passes `keep`.
  void filter_rules(const std::function<bool(const std::string&)>& keep);
};

RelationSet operator+(RelationSet a, const RelationSet& b);

/// Well-founded measure, compared lexicographically. Every built-in rule
/// strictly decreases it:
///   weight       definitional weight (Sigma_k: 4*3^k, twisted PiDiag: 2, PiDiag: 1)
///   repeated     sum over indices of (occurrences - 1)
///   generators   number of generators
///   displacement sum of (j - i) over binary generators plus (m - i) over unary ones
///   involution   number of InvolGraph generators
struct Measure {
  std::int64_t weight = 0;
  int repeated = 0;
  int generators = 0;
  std::int64_t displacement = 0;
  int involution = 0;
  auto operator<=>(const Measure&) const = default;
};

Measure measure(const Monomial& m, int arity);

/// Number of indices occurring in more than one generator.
int repeated_index_count(const Monomial& m);

struct ReduceOptions {
  std::uint64_t max_applications = 20'000'000;
  /// Assert the measure decreases at every application (ConfigError otherwise).
  bool check_measure = false;
};

/// Rule application record for callers that audit a reduction.
struct ReduceStats {
  std::uint64_t applications = 0;
  std::uint64_t dropped = 0;
};

/// Normal form under rs with the pinned strategy: first applicable rule in
/// listed order, lowest positions first. Drop-set monomials vanish.
CycleExpr reduce(const CycleExpr& e, const RelationSet& rs, const ReduceOptions& opts = {},
                 ReduceStats* stats = nullptr);

bool is_zero_mod(const CycleExpr& e, const RelationSet& rs, const ReduceOptions& opts = {});

/// Removes every monomial matched by one of the drop rules.
CycleExpr quotient_ideal(const CycleExpr& e, const std::vector<DropRule>& drops);

/// First (rule, binding, positions) that applies to m, if any.
struct RuleMatch {
  const RewriteRule* rule = nullptr;
  Binding binding;
  std::vector<std::size_t> positions;
};
std::optional<RuleMatch> find_match(const Monomial& m, const RelationSet& rs);

/// pushforward_forget with the clearing capabilities carried by rs.
CycleExpr pushforward_forget(const CycleExpr& e, int i, const RelationSet& rs);

}  // namespace mdiag
