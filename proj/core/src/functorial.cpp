#include <algorithm>
#include <optional>
#include <string>

#include "mdiag/cycle_expr.hpp"
#include "mdiag/errors.hpp"

namespace mdiag {

namespace {

int count_touching(const std::vector<Generator>& gens, int i) {
  return static_cast<int>(std::count_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.touches(i); }));
}

std::string describe(const Monomial& m) {
  std::string s;
  for (const auto& g : m.generators()) {
    if (!s.empty()) s += "*";
    s += kind_name(g.kind);
    s += "(";
    for (std::size_t k = 0; k < g.idx.size(); ++k) s += (k ? "," : "") + std::to_string(g.idx[k]);
    if (!g.symbol.empty()) s += ";" + g.symbol;
    s += ")";
  }
  return s.empty() ? "1" : s;
}

[[noreturn]] void not_cleared(const Monomial& m, int i, const std::string& why) {
  throw NotClearedError("index " + std::to_string(i) + " not cleared in " + describe(m) + ": " + why);
}

Generator substitute(const Generator& g, int from, int to) {
  return g.relabel([&](int t) { return t == from ? to : t; });
}

// Moves g from factor i to factor j across InvolGraph(i,j), applying the involution.
Generator involution_move(const Generator& g, int i, int j, const ClearingRules& rules, const Monomial& m) {
  switch (g.kind) {
    case GenKind::Diagonal: {
      int k = g.idx[0] == i ? g.idx[1] : g.idx[0];
      return Generator::invol_graph(j, k);
    }
    case GenKind::InvolGraph: {
      int k = g.idx[0] == i ? g.idx[1] : g.idx[0];
      return Generator::diagonal(j, k);
    }
    case GenKind::PiDiagonal:
    case GenKind::Sigma:
      return substitute(g, i, j);
    case GenKind::TwistedPiDiagonal:
      if (g.idx[1] == i && !rules.invariant_symbols.count(g.symbol))
        not_cleared(m, i, "point '" + g.symbol + "' is not fixed by the involution");
      return substitute(g, i, j);
    case GenKind::PointCycle:
      if (!rules.invariant_symbols.count(g.symbol))
        not_cleared(m, i, "point '" + g.symbol + "' is not fixed by the involution");
      return substitute(g, i, j);
    case GenKind::Divisor:
      not_cleared(m, i, "divisor cannot cross an involution graph");
  }
  return g;
}

}  // namespace

std::optional<Monomial> clear_index(const Monomial& m, int i, const ClearingRules& rules) {
  const auto& gens = m.generators();
  if (count_touching(gens, i) <= 1) return m;

  // T1: a point class times any other unary class on the same factor is 0.
  int unary = 0;
  bool point = false;
  for (const auto& g : gens)
    if (g.is_unary() && g.touches(i)) {
      ++unary;
      point = point || g.kind == GenKind::PointCycle;
    }
  if (unary >= 2 && point) return std::nullopt;

  auto find_anchor = [&](GenKind kind) -> std::ptrdiff_t {
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (gens[k].kind == kind && gens[k].touches(i)) return static_cast<std::ptrdiff_t>(k);
    return -1;
  };

  std::ptrdiff_t a = rules.diagonal_transport ? find_anchor(GenKind::Diagonal) : -1;
  bool invol = false;
  if (a < 0 && rules.involution_transport) {
    a = find_anchor(GenKind::InvolGraph);
    invol = a >= 0;
  }
  if (a < 0) not_cleared(m, i, "no diagonal anchor");

  const Generator& anchor = gens[a];
  const int j = anchor.idx[0] == i ? anchor.idx[1] : anchor.idx[0];
  std::vector<Generator> out;
  out.reserve(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (static_cast<std::ptrdiff_t>(k) == a || !gens[k].touches(i)) {
      out.push_back(gens[k]);
      continue;
    }
    try {
      out.push_back(invol ? involution_move(gens[k], i, j, rules, m) : substitute(gens[k], i, j));
    } catch (const ArityError&) {
      not_cleared(m, i, "transport produces a degenerate generator");
    }
  }
  return Monomial(std::move(out));
}

CycleExpr pushforward_forget(const CycleExpr& e, int i, const ClearingRules& rules) {
  if (i < 0 || i >= e.arity())
    throw ArityError("pushforward: factor " + std::to_string(i) + " outside X^" + std::to_string(e.arity()));
  const int n = e.model()->dimension;
  CycleExpr out(e.arity() - 1, e.model());
  auto renumber = [i](int t) { return t > i ? t - 1 : t; };
  auto degree = [&](const Monomial& m) -> Rational {
    if (!rules.cover_degree)
      throw UnsupportedModelError("pushforward of " + describe(m) + " needs a cover degree");
    return Rational(*rules.cover_degree);
  };

  for (const auto& [mono, c] : e.terms()) {
    const auto cleared = clear_index(mono, i, rules);
    if (!cleared) continue;
    const Monomial& m = *cleared;
    const auto& gens = m.generators();
    auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.touches(i); });
    if (it == gens.end()) continue;  // fibre of positive dimension

    Rational coef = c;
    std::vector<Generator> rest;
    rest.reserve(gens.size());
    for (auto jt = gens.begin(); jt != gens.end(); ++jt)
      if (jt != it) rest.push_back(jt->relabel(renumber));

    const Generator& g = *it;
    switch (g.kind) {
      case GenKind::PointCycle:
      case GenKind::Diagonal:
      case GenKind::InvolGraph:
        break;
      case GenKind::PiDiagonal:
        coef *= degree(m);
        break;
      case GenKind::TwistedPiDiagonal:
        if (g.idx[1] == i) continue;
        coef *= degree(m);
        break;
      case GenKind::Sigma: {
        const int k = g.sigma_order();
        Rational d = degree(m);
        coef *= d - k;
        if (k >= 2) {
          std::vector<int> idx;
          for (int t : g.idx)
            if (t != i) idx.push_back(renumber(t));
          rest.push_back(Generator::sigma(std::move(idx)));
        }
        break;
      }
      case GenKind::Divisor:
        if (n >= 2) continue;
        throw UnsupportedModelError("pushforward of a divisor class on a curve needs its degree");
    }
    if (coef != 0) out.add_term(Monomial(std::move(rest)), coef);
  }
  return out;
}

}  // namespace mdiag
