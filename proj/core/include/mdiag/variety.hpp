#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "mdiag/rational.hpp"

namespace mdiag {

enum class SymbolRole { Point, Divisor };

/// Abstract variety X the cycle calculus lives on: dimension, symbol roles and
/// optional cover data. Purely symbolic; cohomological data lives in CohomModel.
struct VarietyModel {
  std::string name = "X";
  int dimension = 2;
  std::map<std::string, SymbolRole> symbols;
  /// Degree of pi: X -> Y when X is treated as a cover.
  std::optional<int> cover_degree;
  bool has_involution = false;
  /// Point symbols fixed by the covering involution.
  std::set<std::string> involution_invariant;
  /// Intersection numbers deg(L.L') of divisor symbols, stored once per unordered pair.
  std::map<std::pair<std::string, std::string>, Rational> intersections;

  /// Throws ConfigError on n < 1, reserved symbol names or dangling table entries.
  void validate() const;

  SymbolRole role(const std::string& symbol) const;
  bool has_symbol(const std::string& symbol) const { return symbols.count(symbol) != 0; }
  std::optional<Rational> intersection(const std::string& a, const std::string& b) const;
  void set_intersection(const std::string& a, const std::string& b, Rational value);
};

using ModelPtr = std::shared_ptr<const VarietyModel>;

/// Validates and freezes a model.
ModelPtr make_variety(VarietyModel model);

/// n = 2, point symbols a, b, o, pt; divisor symbols L, K.
ModelPtr generic_variety(int dimension = 2);

/// Names the expression grammar reserves; symbols may not use them.
bool is_reserved_name(const std::string& name);

}  // namespace mdiag
