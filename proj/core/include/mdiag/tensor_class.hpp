#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "mdiag/rational.hpp"

namespace mdiag {

/// Sparse element of H*(X)^{(x) m}: basis multi-index -> coefficient.
/// A multi-index is packed into 64 bits, one byte per slot (m <= 8, rank <= 255).
class TensorClass {
 public:
  using Key = std::uint64_t;
  using Terms = std::map<Key, Rational>;
  static constexpr int kMaxArity = 8;

  explicit TensorClass(int arity);

  static Key pack(std::span<const int> slots);
  static int slot(Key key, int s) { return static_cast<int>((key >> (8 * s)) & 0xffu); }
  static Key with_slot(Key key, int s, int value) {
    return (key & ~(Key{0xff} << (8 * s))) | (Key(value) << (8 * s));
  }

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(std::span<const int> slots) const;

  void add(Key key, const Rational& c);
  TensorClass& operator+=(const TensorClass& other);
  TensorClass& operator-=(const TensorClass& other);
  TensorClass& operator*=(const Rational& s);
  friend TensorClass operator+(TensorClass a, const TensorClass& b) { return a += b; }
  friend TensorClass operator-(TensorClass a, const TensorClass& b) { return a -= b; }
  friend TensorClass operator*(const Rational& s, TensorClass a) { return a *= s; }
  bool operator==(const TensorClass& other) const = default;

 private:
  int arity_;
  Terms terms_;
};

}  // namespace mdiag
