#include "mdiag/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "mdiag/combinatorics.hpp"
#include "mdiag/errors.hpp"

namespace mdiag {

CycleExpr star_power(int arity, ModelPtr model, const std::string& s, std::span<const int> I) {
  std::vector<Generator> gens;
  for (int i : I) gens.push_back(Generator::point(i, s));
  CycleExpr e(arity, std::move(model));
  e.add_term(Monomial(std::move(gens)), 1);
  return e;
}

CycleExpr small_diagonal(int arity, ModelPtr model, std::span<const int> J) {
  if (J.empty()) throw ArityError("small diagonal of an empty index set");
  const int root = *std::min_element(J.begin(), J.end());
  std::vector<Generator> gens;
  for (int j : J)
    if (j != root) gens.push_back(Generator::diagonal(root, j));
  CycleExpr e(arity, std::move(model));
  e.add_term(Monomial(std::move(gens)), 1);
  return e;
}

CycleExpr gamma_m(int m, const std::string& s, ModelPtr model) {
  if (m < 2) throw ArityError("gamma needs m >= 2");
  CycleExpr e(m, model);
  const unsigned full = (1u << m) - 1;
  for (unsigned mask = 0; mask < full; ++mask) {
    std::vector<int> I, J;
    for (int i = 0; i < m; ++i) (mask >> i & 1u ? I : J).push_back(i);
    Rational sign = I.size() % 2 ? -1 : 1;
    e += sign * mul(star_power(m, model, s, I), small_diagonal(m, model, J));
  }
  return e;
}

CycleExpr gamma_1m(int m, const std::string& s, ModelPtr model) {
  if (m < 1) throw ArityError("gamma1 needs m >= 1");
  CycleExpr e = CycleExpr::one(m + 1, model);
  for (int i = 1; i <= m; ++i) {
    CycleExpr f = CycleExpr::generator(m + 1, model, Generator::diagonal(0, i)) -
                  CycleExpr::generator(m + 1, model, Generator::point(i, s));
    e = mul(e, f);
  }
  return e;
}

CycleExpr delta_pm(int arity, ModelPtr model, int i, int j, int sign) {
  if (!model->has_involution) throw UnsupportedModelError("deltapm needs a variety with an involution");
  if (sign != 1 && sign != -1) throw ArityError("deltapm sign must be + or -");
  return CycleExpr::generator(arity, model, Generator::diagonal(i, j)) +
         CycleExpr::generator(arity, model, Generator::invol_graph(i, j), Rational(sign));
}

CycleExpr sigma_b_expansion(int k, int d, const std::string& s, ModelPtr model) {
  if (k < 1) throw ArityError("sigma_b needs k >= 1");
  if (d < 2) throw ConfigError("sigma_b needs a cover degree d >= 2");
  CycleExpr e(k + 1, model);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> I{0}, J;
    for (int i = 1; i <= k; ++i) (mask >> (i - 1) & 1u ? I : J).push_back(i);
    const int ni = static_cast<int>(I.size()) - 1;
    Rational coef(combinatorics::lambda(k, ni, d));
    if ((k - ni) % 2) coef = -coef;
    if (coef == 0) continue;
    std::vector<Generator> gens;
    if (ni >= 1) gens.push_back(Generator::sigma(I));
    for (int j : J) gens.push_back(Generator::point(j, s));
    e.add_term(Monomial(std::move(gens)), coef);
  }
  return e;
}

CycleExpr delta0(int arity, ModelPtr model, int i, int j, const std::string& point, const std::string& canonical) {
  CycleExpr e = CycleExpr::generator(arity, model, Generator::diagonal(i, j)) -
                CycleExpr::generator(arity, model, Generator::point(i, point)) -
                CycleExpr::generator(arity, model, Generator::point(j, point));
  if (model->has_symbol(canonical)) {
    auto k2 = model->intersection(canonical, canonical);
    if (!k2) throw UnsupportedModelError("delta0: no value for deg(" + canonical + "^2)");
    if (*k2 == 0) throw UnsupportedModelError("delta0: deg(" + canonical + "^2) = 0 with " + canonical + " nonzero");
    CycleExpr kk(arity, model);
    kk.add_term(Monomial({Generator::divisor(i, canonical), Generator::divisor(j, canonical)}), 1 / *k2);
    e -= kk;
  }
  return e;
}

CycleExpr kimura_class(int M, ModelPtr model, const std::string& point, const std::string& canonical) {
  if (M < 1) throw ArityError("kimura needs M >= 1");
  const int arity = 2 * M + 2;
  std::vector<CycleExpr> d0;  // d0[i * (M+1) + t] = delta0(i, M+1+t)
  for (int i = 0; i <= M; ++i)
    for (int t = 0; t <= M; ++t) d0.push_back(delta0(arity, model, i, M + 1 + t, point, canonical));
  std::vector<int> sigma(M + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  CycleExpr e(arity, model);
  do {
    int inversions = 0;
    for (int a = 0; a <= M; ++a)
      for (int b = a + 1; b <= M; ++b) inversions += sigma[a] > sigma[b];
    CycleExpr term = CycleExpr::one(arity, model);
    for (int i = 0; i <= M; ++i) term = mul(term, d0[i * (M + 1) + sigma[i]]);
    e += inversions % 2 ? -term : term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return e;
}

CycleExpr involution_pullback(const CycleExpr& e, int index, const std::set<std::string>& invariant) {
  CycleExpr out(e.arity(), e.model());
  for (const auto& [m, c] : e.terms()) {
    std::vector<Generator> gens;
    for (const auto& g : m.generators()) {
      if (!g.touches(index)) {
        gens.push_back(g);
        continue;
      }
      switch (g.kind) {
        case GenKind::Diagonal: gens.push_back(Generator::invol_graph(g.idx[0], g.idx[1])); break;
        case GenKind::InvolGraph: gens.push_back(Generator::diagonal(g.idx[0], g.idx[1])); break;
        case GenKind::PiDiagonal: gens.push_back(g); break;
        case GenKind::Sigma:
          throw UnsupportedModelError("involution pullback of Sigma: rewrite it through InvolGraph first");
        case GenKind::TwistedPiDiagonal:
        case GenKind::PointCycle:
          if (!(g.kind == GenKind::TwistedPiDiagonal && g.idx[0] == index) && !invariant.count(g.symbol))
            throw UnsupportedModelError("involution pullback: point '" + g.symbol + "' is not invariant");
          gens.push_back(g);
          break;
        case GenKind::Divisor:
          throw UnsupportedModelError("involution pullback of a divisor class is not modelled");
      }
    }
    out.add_term(Monomial(std::move(gens)), c);
  }
  return out;
}

CycleExpr involution_oddness_pushforward(const CycleExpr& e, const RelationSet& rs) {
  if (e.arity() < 1) throw ArityError("pushforward from X^0");
  CycleExpr flipped = involution_pullback(e, 0, rs.clearing.invariant_symbols);
  if (reduce(flipped + e, rs).is_zero()) return CycleExpr(e.arity() - 1, e.model());
  return pushforward_forget(e, 0, rs);
}

}  // namespace mdiag
