#include "mdiag/tensor_class.hpp"

#include "mdiag/errors.hpp"

namespace mdiag {

TensorClass::TensorClass(int arity) : arity_(arity) {
  if (arity < 0 || arity > kMaxArity)
    throw ArityError("tensor classes support arity 0.." + std::to_string(kMaxArity) + ", got " + std::to_string(arity));
}

TensorClass::Key TensorClass::pack(std::span<const int> slots) {
  Key k = 0;
  for (std::size_t s = 0; s < slots.size(); ++s) k |= Key(slots[s]) << (8 * s);
  return k;
}

Rational TensorClass::coefficient(std::span<const int> slots) const {
  auto it = terms_.find(pack(slots));
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorClass::add(Key key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorClass& TensorClass::operator+=(const TensorClass& other) {
  if (other.arity_ != arity_) throw ArityError("tensor arity mismatch");
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

TensorClass& TensorClass::operator-=(const TensorClass& other) {
  if (other.arity_ != arity_) throw ArityError("tensor arity mismatch");
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

TensorClass& TensorClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

}  // namespace mdiag
