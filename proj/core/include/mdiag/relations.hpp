#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdiag/rewrite.hpp"

namespace mdiag::relations {

/// Point/divisor incidences valid on any X: T1 (two classes on one factor
/// vanish), T2 (diagonal chains), T3 (unary classes move to the larger end
/// of a diagonal).
RelationSet trivial();

/// Delta_ij * s_i -> s_i * s_j.
RelationSet point_relation(const std::string& s);

struct BvParams {
  std::string point = "o";
  /// Symmetric table deg(L.L'), looked up in either order.
  std::map<std::pair<std::string, std::string>, Rational> degrees;
  /// Coefficient of Delta^2; the topological Euler characteristic (24 on a K3).
  Rational euler = 24;
};

/// trivial + point_relation(o) + B1..B4.
RelationSet bv_k3(const BvParams& params);

/// trivial + labelled diagonal/graph shuffles, transport of invariant points
/// across graphs, the branch relation and expansion of PiDiagonal/twisted
/// PiDiagonal (cover degree 2).
RelationSet cover_double(const std::vector<std::string>& invariant, const std::vector<std::string>& branch);

/// trivial + Sigma elimination for a degree-d cover: Sigma_k -> 0 for k >= d
/// (when with_vanishing), the recursion for Sigma_{k+1}, Sigma_1 -> PiDiag - Delta.
RelationSet cover_degree(int d, bool with_vanishing = true);

/// Monomials containing PiDiagonal(0, .).
DropRule e_ideal();

/// PiDiagonal(0,j) -> d * b_j (working modulo the twisted PiDiagonals at 0)
/// together with point_relation(b).
RelationSet decorate(int d, const std::string& b);

/// Drops monomials with at least m twisted PiDiagonals (0, j; s) for distinct j.
RelationSet hypothesis_ideal(int m, const std::string& s);

/// Parameters shared by builtin tokens; taken from the variety unless overridden.
struct Params {
  BvParams bv;
  std::vector<std::string> invariant;
  std::vector<std::string> branch;
};

Params default_params(const VarietyModel& model);

/// Builds a relation set from '+'-joined builtin tokens, e.g.
/// "trivial+point:b", "bv_k3", "cover_double+hypothesis:3:a", "cover_degree:4+E".
RelationSet builtin(std::string_view spec, const Params& params);

/// Token grammar accepted by builtin(), one line per family.
std::vector<std::string> builtin_help();

/// JSON relation config (schema in docs/relations.md).
RelationSet from_json_text(std::string_view text, const VarietyModel& model);
RelationSet load(const std::filesystem::path& path, const VarietyModel& model);

/// A path to an existing file is loaded; anything else is a builtin spec.
RelationSet resolve(const std::string& file_or_builtin, const VarietyModel& model);

}  // namespace mdiag::relations
