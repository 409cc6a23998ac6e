#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mdiag {

/// Generator kinds of the cycle calculus on X^m.
///
/// Diagonal, InvolGraph and PiDiagonal are symmetric and stored with
/// idx = {i, j}, i < j. TwistedPiDiagonal is oriented: idx = {base, target}
/// and stands for pi_2^*Delta_Y - d * p_target^*s. Sigma(k) stores its k + 1
/// indices sorted (the locus is symmetric in all of them).
enum class GenKind : std::uint8_t {
  Diagonal,
  InvolGraph,
  PiDiagonal,
  TwistedPiDiagonal,
  Sigma,
  PointCycle,
  Divisor,
};

const char* kind_name(GenKind kind);

struct Generator {
  GenKind kind{GenKind::Diagonal};
  std::vector<int> idx;
  std::string symbol;

  static Generator diagonal(int i, int j);
  static Generator invol_graph(int i, int j);
  static Generator pi_diagonal(int i, int j);
  static Generator twisted_pi_diagonal(int base, int target, std::string symbol);
  static Generator sigma(std::vector<int> indices);
  static Generator point(int i, std::string symbol);
  static Generator divisor(int i, std::string symbol);

  bool is_binary_symmetric() const {
    return kind == GenKind::Diagonal || kind == GenKind::InvolGraph || kind == GenKind::PiDiagonal;
  }
  bool is_unary() const { return kind == GenKind::PointCycle || kind == GenKind::Divisor; }
  bool touches(int i) const;
  int max_index() const;
  /// Sigma order k (number of indices minus one).
  int sigma_order() const { return static_cast<int>(idx.size()) - 1; }

  /// Codimension on X^m for dim X = n.
  int codim(int n) const;

  /// Same generator with every index sent through `map` (re-normalised).
  /// Throws ArityError if the image is degenerate (e.g. Diagonal(i,i)).
  template <class F>
  Generator relabel(F&& map) const {
    Generator g = *this;
    for (int& i : g.idx) i = map(i);
    g.normalize();
    return g;
  }

  void normalize();

  auto operator<=>(const Generator&) const = default;
};

}  // namespace mdiag
