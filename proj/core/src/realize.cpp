#include "mdiag/realize.hpp"

#include <vector>

#include "mdiag/errors.hpp"

namespace mdiag {

namespace {

using Key = TensorClass::Key;

Key unit_key(int arity, const CohomModel& model) {
  Key k = 0;
  for (int s = 0; s < arity; ++s) k = TensorClass::with_slot(k, s, model.unit());
  return k;
}

Key remove_slot(Key k, int slot, int arity) {
  Key out = 0;
  for (int s = 0, t = 0; s < arity; ++s)
    if (s != slot) out = TensorClass::with_slot(out, t++, TensorClass::slot(k, s));
  return out;
}

TensorClass binary(int arity, int i, int j, const std::vector<std::tuple<int, int, Rational>>& terms,
                   const CohomModel& model) {
  if (i > j) std::swap(i, j);
  TensorClass t(arity);
  const Key base = unit_key(arity, model);
  for (const auto& [a, b, c] : terms) t.add(TensorClass::with_slot(TensorClass::with_slot(base, i, a), j, b), c);
  return t;
}

}  // namespace

TensorClass unit_tensor(int arity, const CohomModel& model) {
  TensorClass t(arity);
  t.add(unit_key(arity, model), 1);
  return t;
}

TensorClass slot_class(int arity, int s, const SparseVec& v, const CohomModel& model) {
  TensorClass t(arity);
  const Key base = unit_key(arity, model);
  for (const auto& [a, c] : v) t.add(TensorClass::with_slot(base, s, a), c);
  return t;
}

TensorClass multiply(const TensorClass& a, const TensorClass& b, const CohomModel& model) {
  if (a.arity() != b.arity()) throw ArityError("multiply: tensor arity mismatch");
  const int m = a.arity();
  TensorClass out(m);
  std::vector<std::pair<Key, Rational>> partial, grown;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // sign (-1)^{sum_{s<t} |y_s||x_t|}
      int parity = 0, ydeg = 0;
      for (int t = 0; t < m; ++t) {
        parity ^= (ydeg & model.degree(TensorClass::slot(ka, t))) & 1;
        ydeg ^= model.degree(TensorClass::slot(kb, t)) & 1;
      }
      partial.clear();
      partial.emplace_back(0, parity ? Rational(-ca * cb) : Rational(ca * cb));
      for (int s = 0; s < m && !partial.empty(); ++s) {
        const auto& prod = model.product(TensorClass::slot(ka, s), TensorClass::slot(kb, s));
        if (prod.empty()) {
          partial.clear();
          break;
        }
        if (prod.size() == 1) {
          for (auto& [k, c] : partial) {
            k = TensorClass::with_slot(k, s, prod[0].first);
            if (prod[0].second != 1) c *= prod[0].second;
          }
          continue;
        }
        grown.clear();
        for (const auto& [k, c] : partial)
          for (const auto& [e, x] : prod) grown.emplace_back(TensorClass::with_slot(k, s, e), c * x);
        partial.swap(grown);
      }
      for (const auto& [k, c] : partial) out.add(k, c);
    }
  }
  return out;
}

TensorClass contract(const TensorClass& t, int slot, const CohomModel& model) {
  if (slot < 0 || slot >= t.arity()) throw ArityError("contract: slot out of range");
  TensorClass out(t.arity() - 1);
  for (const auto& [k, c] : t.terms()) {
    const Rational& w = model.integral(TensorClass::slot(k, slot));
    if (w != 0) out.add(remove_slot(k, slot, t.arity()), c * w);
  }
  return out;
}

TensorClass pullback(const TensorClass& t, std::span<const int> placement, int m, const CohomModel& model) {
  const int k = t.arity();
  if (static_cast<int>(placement.size()) != k) throw ArityError("pullback: placement size differs from arity");
  std::vector<bool> hit(m, false);
  for (int p : placement) {
    if (p < 0 || p >= m || hit[p]) throw ArityError("pullback: placement is not injective into X^" + std::to_string(m));
    hit[p] = true;
  }
  TensorClass out(m);
  const Key base = unit_key(m, model);
  for (const auto& [key, c] : t.terms()) {
    Key nk = base;
    int parity = 0;
    for (int s = 0; s < k; ++s) {
      const int x = TensorClass::slot(key, s);
      nk = TensorClass::with_slot(nk, placement[s], x);
      for (int u = s + 1; u < k; ++u)
        if (placement[s] > placement[u]) parity ^= model.degree(x) * model.degree(TensorClass::slot(key, u)) & 1;
    }
    out.add(nk, parity ? Rational(-c) : c);
  }
  return out;
}

std::optional<int> degree(const TensorClass& t, const CohomModel& model) {
  if (t.is_zero()) return std::nullopt;
  const Key k = t.terms().begin()->first;
  int d = 0;
  for (int s = 0; s < t.arity(); ++s) d += model.degree(TensorClass::slot(k, s));
  return d;
}

TensorClass diagonal_tensor(const CohomModel& model) { return binary(2, 0, 1, model.diagonal_terms(), model); }

TensorClass apply(const TensorClass& alpha, const TensorClass& x, const CohomModel& model) {
  const int p0[] = {0};
  return contract(multiply(alpha, pullback(x, p0, 2, model), model), 0, model);
}

TensorClass compose(const TensorClass& alpha, const TensorClass& beta, const CohomModel& model) {
  const int p01[] = {0, 1}, p12[] = {1, 2};
  return contract(multiply(pullback(alpha, p01, 3, model), pullback(beta, p12, 3, model), model), 1, model);
}

TensorClass realize(const Generator& g, int arity, const CohomModel& model) {
  auto need_double = [&]() {
    if (!model.has_involution())
      throw UnsupportedModelError(std::string(kind_name(g.kind)) + " needs a double-cover model; '" + model.name() +
                                  "' has no involution");
  };
  switch (g.kind) {
    case GenKind::Diagonal: return binary(arity, g.idx[0], g.idx[1], model.diagonal_terms(), model);
    case GenKind::InvolGraph: need_double(); return binary(arity, g.idx[0], g.idx[1], model.graph_terms(), model);
    case GenKind::PiDiagonal:
      need_double();
      return binary(arity, g.idx[0], g.idx[1], model.diagonal_terms(), model) +
             binary(arity, g.idx[0], g.idx[1], model.graph_terms(), model);
    case GenKind::TwistedPiDiagonal: {
      need_double();
      TensorClass t = binary(arity, g.idx[0], g.idx[1], model.diagonal_terms(), model) +
                      binary(arity, g.idx[0], g.idx[1], model.graph_terms(), model);
      return t - Rational(2) * slot_class(arity, g.idx[1], model.class_vector(g.symbol), model);
    }
    case GenKind::Sigma:
      need_double();
      if (g.sigma_order() == 1) return binary(arity, g.idx[0], g.idx[1], model.graph_terms(), model);
      return TensorClass(arity);
    case GenKind::PointCycle:
    case GenKind::Divisor: return slot_class(arity, g.idx[0], model.class_vector(g.symbol), model);
  }
  return TensorClass(arity);
}

TensorClass realize(const CycleExpr& e, const CohomModel& model) {
  const int m = e.arity();
  TensorClass out(m);
  for (const auto& [mono, c] : e.terms()) {
    TensorClass t = unit_tensor(m, model);
    for (const auto& g : mono.generators()) {
      t = multiply(t, realize(g, m, model), model);
      if (t.is_zero()) break;
    }
    t *= c;
    out += t;
  }
  return out;
}

std::string to_text(const TensorClass& t, const CohomModel& model, std::size_t limit) {
  if (t.is_zero()) return "0";
  std::string out;
  std::size_t n = 0;
  for (const auto& [k, c] : t.terms()) {
    if (n++ == limit) {
      out += " + ... (" + std::to_string(t.size()) + " terms)";
      break;
    }
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*[";
    for (int s = 0; s < t.arity(); ++s) out += (s ? "|" : "") + model.data().basis_names[TensorClass::slot(k, s)];
    out += "]";
  }
  return out;
}

}  // namespace mdiag
