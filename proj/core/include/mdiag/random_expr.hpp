#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mdiag/cycle_expr.hpp"

namespace mdiag {

/// Fixed default seed for every randomized property check.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Shape of random expressions. Monomials are built from "pieces" of
/// codimension n (one binary or point generator, or n divisor factors), so
/// every term of one expression has codimension pieces * n.
struct RandomExprConfig {
  int arity = 3;
  int min_terms = 1;
  int max_terms = 3;
  int min_pieces = 1;
  int max_pieces = 3;
  bool diagonals = true;
  bool invol_graphs = false;
  bool pi_diagonals = false;
  /// Points with a divisor factor standing in for one of the n slots.
  std::vector<std::string> points;
  std::vector<std::string> divisors;
  /// Numerators in [-max_numerator, max_numerator] \ {0}, denominators in [1, max_denominator].
  int max_numerator = 5;
  int max_denominator = 3;

  /// Points and divisors taken from the model's symbol table.
  static RandomExprConfig for_model(const VarietyModel& model, int arity);
};

CycleExpr random_expr(std::mt19937_64& rng, const ModelPtr& model, const RandomExprConfig& config);

/// Uniform integer in [lo, hi].
int uniform(std::mt19937_64& rng, int lo, int hi);

/// Random injective map {0..k-1} -> {0..m-1}.
std::vector<int> random_placement(std::mt19937_64& rng, int k, int m);

}  // namespace mdiag
