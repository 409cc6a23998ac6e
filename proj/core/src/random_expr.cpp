#include "mdiag/random_expr.hpp"

#include <algorithm>
#include <numeric>

#include "mdiag/errors.hpp"

namespace mdiag {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_placement(std::mt19937_64& rng, int k, int m) {
  if (k > m) throw ArityError("placement needs k <= m");
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

RandomExprConfig RandomExprConfig::for_model(const VarietyModel& model, int arity) {
  RandomExprConfig c;
  c.arity = arity;
  for (const auto& [sym, role] : model.symbols) (role == SymbolRole::Point ? c.points : c.divisors).push_back(sym);
  c.invol_graphs = model.has_involution;
  return c;
}

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

void add_piece(std::mt19937_64& rng, const VarietyModel& model, const RandomExprConfig& c, std::vector<Generator>& out) {
  std::vector<int> kinds;
  if (c.arity >= 2) {
    if (c.diagonals) kinds.push_back(0);
    if (c.invol_graphs) kinds.push_back(1);
    if (c.pi_diagonals) kinds.push_back(2);
  }
  if (!c.points.empty()) kinds.push_back(3);
  if (!c.divisors.empty()) kinds.push_back(4);
  if (kinds.empty()) throw ConfigError("random expression config allows no generators");
  const int kind = pick(rng, kinds);
  if (kind <= 2) {
    int i = uniform(rng, 0, c.arity - 1);
    int j = uniform(rng, 0, c.arity - 2);
    if (j >= i) ++j;
    out.push_back(kind == 0 ? Generator::diagonal(i, j) : kind == 1 ? Generator::invol_graph(i, j) : Generator::pi_diagonal(i, j));
  } else if (kind == 3) {
    out.push_back(Generator::point(uniform(rng, 0, c.arity - 1), pick(rng, c.points)));
  } else {
    for (int t = 0; t < model.dimension; ++t)
      out.push_back(Generator::divisor(uniform(rng, 0, c.arity - 1), pick(rng, c.divisors)));
  }
}

}  // namespace

CycleExpr random_expr(std::mt19937_64& rng, const ModelPtr& model, const RandomExprConfig& c) {
  if (c.arity < 1) throw ArityError("random expressions need arity >= 1");
  CycleExpr e(c.arity, model);
  const int pieces = uniform(rng, c.min_pieces, c.max_pieces);
  const int terms = uniform(rng, c.min_terms, c.max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<Generator> gens;
    for (int p = 0; p < pieces; ++p) add_piece(rng, *model, c, gens);
    int num = uniform(rng, 1, c.max_numerator);
    if (uniform(rng, 0, 1)) num = -num;
    Rational coef(num, uniform(rng, 1, c.max_denominator));
    coef.canonicalize();
    e.add_term(Monomial(std::move(gens)), coef);
  }
  return e;
}

}  // namespace mdiag
