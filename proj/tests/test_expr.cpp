#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include "mdiag/constructions.hpp"
#include "mdiag/errors.hpp"
#include "mdiag/random_expr.hpp"
#include "mdiag/relations.hpp"

using namespace mdiag;

namespace {

const ModelPtr X = generic_variety(2);

CycleExpr D(int m, int i, int j) { return CycleExpr::generator(m, X, Generator::diagonal(i, j)); }
CycleExpr P(int m, int i, const char* s = "a") { return CycleExpr::generator(m, X, Generator::point(i, s)); }
CycleExpr Div(int m, int i, const char* s = "L") { return CycleExpr::generator(m, X, Generator::divisor(i, s)); }

}  // namespace

TEST_CASE("generators normalize and validate") {
  CHECK(Generator::diagonal(2, 1).idx == std::vector<int>{1, 2});
  CHECK(Generator::invol_graph(3, 0).idx == std::vector<int>{0, 3});
  CHECK(Generator::sigma({4, 1, 2}).idx == std::vector<int>{1, 2, 4});
  CHECK(Generator::twisted_pi_diagonal(2, 0, "a").idx == std::vector<int>{2, 0});
  CHECK_THROWS_AS(Generator::diagonal(1, 1), ArityError);
  CHECK_THROWS_AS(Generator::sigma({1, 1}), ArityError);
  CHECK_THROWS_AS(Generator::point(-1, "a"), ArityError);
}

TEST_CASE("generator codimension") {
  CHECK(Generator::diagonal(0, 1).codim(2) == 2);
  CHECK(Generator::point(0, "a").codim(3) == 3);
  CHECK(Generator::divisor(0, "L").codim(3) == 1);
  CHECK(Generator::sigma({0, 1, 2}).codim(2) == 4);
}

TEST_CASE("varieties") {
  VarietyModel v;
  v.dimension = 0;
  CHECK_THROWS_AS(make_variety(v), ConfigError);
  VarietyModel w;
  w.symbols["D"] = SymbolRole::Point;
  CHECK_THROWS_AS(make_variety(w), ConfigError);
  CHECK_THROWS_AS(X->role("zz"), UnknownSymbolError);
}

TEST_CASE("canonicalize merges, cancels and rejects mixed codimension") {
  const Term t1{Monomial({Generator::diagonal(2, 1)}), 1};
  const Term t2{Monomial({Generator::diagonal(1, 2)}), 1};
  const std::vector<Term> terms{t1, t2};
  CHECK(CycleExpr::from_terms(3, X, terms) == Rational(2) * D(3, 1, 2));
  CHECK((P(3, 1) * D(3, 1, 2) - P(3, 1) * D(3, 1, 2)).is_zero());
  CHECK_THROWS_AS(P(2, 0) + Div(2, 0), HomogeneityError);
  const std::vector<Term> mixed{{Monomial({Generator::point(0, "a")}), 1}, {Monomial({Generator::divisor(0, "L")}), 1}};
  CHECK_THROWS_AS(CycleExpr::from_terms(2, X, mixed), HomogeneityError);
  CHECK_THROWS_AS(CycleExpr::generator(2, X, Generator::point(0, "L")), Error);
  CHECK_THROWS_AS(CycleExpr::generator(2, X, Generator::diagonal(0, 2)), ArityError);
}

TEST_CASE("canonicalize is idempotent on random expressions") {
  std::mt19937_64 rng(kDefaultSeed);
  for (int t = 0; t < 1000; ++t) {
    const CycleExpr e = random_expr(rng, X, RandomExprConfig::for_model(*X, uniform(rng, 1, 5)));
    CHECK(canonicalize(canonicalize(e)) == canonicalize(e));
    CHECK(canonicalize(e) == e);
  }
}

TEST_CASE("mul") {
  const CycleExpr lhs = (D(3, 0, 1) - P(3, 1)) * (D(3, 0, 2) - P(3, 2));
  const CycleExpr rhs = D(3, 0, 1) * D(3, 0, 2) - D(3, 0, 1) * P(3, 2) - P(3, 1) * D(3, 0, 2) + P(3, 1) * P(3, 2);
  CHECK(lhs == rhs);
  CHECK(lhs.size() == 4);
  CHECK(D(3, 0, 1) * CycleExpr::one(3, X) == D(3, 0, 1));
  CHECK_THROWS_AS(D(3, 0, 1) * D(2, 0, 1), ArityError);
  CHECK_THROWS_AS(D(2, 0, 1) * CycleExpr::generator(2, generic_variety(3), Generator::diagonal(0, 1)), Error);
  CHECK((D(3, 0, 1) * Div(3, 2)).codim() == 3);
  CHECK_THROWS_AS(product({}), ArityError);
}

TEST_CASE("mul expands gamma1 pieces for m = 3 term by term") {
  CycleExpr acc = CycleExpr::one(4, X);
  for (int i = 1; i <= 3; ++i) acc = acc * (D(4, 0, i) - P(4, i));
  // hand expansion: sum over subsets I of {1,2,3} carrying the points
  CycleExpr hand(4, X);
  for (int mask = 0; mask < 8; ++mask) {
    CycleExpr term = CycleExpr::one(4, X);
    for (int i = 1; i <= 3; ++i) term = term * ((mask >> (i - 1)) & 1 ? P(4, i) : D(4, 0, i));
    hand += __builtin_popcount(mask) % 2 ? -term : term;
  }
  CHECK(acc == hand);
  CHECK(acc == gamma_1m(3, "a", X));
}

TEST_CASE("pullback") {
  const std::vector<int> place{0, 2};
  CHECK(pullback(D(2, 0, 1), place, 3) == D(3, 0, 2));
  const CycleExpr e = D(3, 0, 1) * P(3, 2) - P(3, 0) * P(3, 1);
  const std::vector<int> id{0, 1, 2};
  CHECK(pullback(e, id, 3) == e);
  const std::vector<int> bad{0, 0, 1};
  CHECK_THROWS_AS(pullback(e, bad, 3), ArityError);
  const std::vector<int> small{0, 1};
  CHECK_THROWS_AS(pullback(e, small, 3), ArityError);
  std::mt19937_64 rng(kDefaultSeed + 1);
  for (int t = 0; t < 300; ++t) {
    const int k = uniform(rng, 1, 3), m1 = uniform(rng, k, 4), m2 = uniform(rng, m1, 6);
    const auto f = random_placement(rng, k, m1);
    const auto g = random_placement(rng, m1, m2);
    std::vector<int> gf(k);
    for (int i = 0; i < k; ++i) gf[i] = g[f[i]];
    const CycleExpr x = random_expr(rng, X, RandomExprConfig::for_model(*X, k));
    CHECK(pullback(pullback(x, f, m1), g, m2) == pullback(x, gf, m2));
    CHECK(pullback(x, f, m1).codim() == x.codim());
  }
}

TEST_CASE("permute") {
  const std::vector<int> swap{1, 0};
  CHECK(permute(D(2, 0, 1), swap) == D(2, 0, 1));
  const std::vector<int> cycle{1, 2, 0};
  CHECK(permute(P(3, 0) * D(3, 1, 2), cycle) == P(3, 1) * D(3, 0, 2));
  const std::vector<int> not_perm{0, 0, 1};
  CHECK_THROWS_AS(permute(D(3, 0, 1), not_perm), ArityError);

  std::mt19937_64 rng(kDefaultSeed + 2);
  for (int t = 0; t < 200; ++t) {
    const int m = uniform(rng, 2, 5);
    auto sigma = random_placement(rng, m, m);
    std::vector<int> inverse(m);
    for (int i = 0; i < m; ++i) inverse[sigma[i]] = i;
    const CycleExpr e = random_expr(rng, X, RandomExprConfig::for_model(*X, m));
    CHECK(permute(permute(e, sigma), inverse) == e);
  }
}

TEST_CASE("gamma_m is invariant under permutations modulo the diagonal shuffle") {
  const auto rs = relations::trivial();
  for (int m = 2; m <= 5; ++m) {
    const CycleExpr g = gamma_m(m, "a", X);
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      CHECK(reduce(permute(g, sigma), rs) == reduce(g, rs));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST_CASE("pushforward_forget") {
  ClearingRules rules;
  CHECK(pushforward_forget(D(2, 0, 1) * P(2, 1), 1, rules) == P(1, 0));
  CHECK(pushforward_forget(D(2, 0, 1), 1, rules) == CycleExpr::one(1, X));
  CHECK(pushforward_forget(P(3, 1) * P(3, 2), 0, rules).is_zero());
  CHECK(pushforward_forget(P(3, 0) * D(3, 1, 2), 0, rules) == D(2, 0, 1));
  CHECK(pushforward_forget(Div(2, 0) * P(2, 1), 0, rules).is_zero());
  CHECK(pushforward_forget(D(3, 0, 2) * D(3, 0, 1), 0, rules) == D(2, 0, 1));
  CHECK(pushforward_forget(P(2, 0) * Div(2, 0) * Div(2, 1), 0, rules).is_zero());
  CHECK_THROWS_AS(pushforward_forget(Div(2, 0, "L") * Div(2, 0, "K") * P(2, 1), 0, rules), NotClearedError);
  CHECK_THROWS_AS(pushforward_forget(D(2, 0, 1) * D(2, 0, 1), 0, rules), NotClearedError);

  auto curve = generic_variety(1);
  const CycleExpr l = CycleExpr::generator(2, curve, Generator::divisor(0, "L")) *
                      CycleExpr::generator(2, curve, Generator::point(1, "a"));
  CHECK_THROWS_AS(pushforward_forget(l, 0, rules), UnsupportedModelError);
  CHECK_THROWS_AS(pushforward_forget(D(2, 0, 1), 2, rules), ArityError);
}

TEST_CASE("pushforward_forget over two indices commutes") {
  const auto rs = relations::trivial();
  std::mt19937_64 rng(kDefaultSeed + 3);
  int tested = 0;
  for (int t = 0; t < 400; ++t) {
    const int m = uniform(rng, 3, 5);
    int i = uniform(rng, 0, m - 1), j = uniform(rng, 0, m - 2);
    if (j >= i) ++j;
    const CycleExpr e = random_expr(rng, X, RandomExprConfig::for_model(*X, m));
    // forget i then j (renumbered), against j then i (renumbered)
    std::optional<CycleExpr> a, b;
    try {
      a = pushforward_forget(pushforward_forget(e, i, rs), j > i ? j - 1 : j, rs);
      b = pushforward_forget(pushforward_forget(e, j, rs), i > j ? i - 1 : i, rs);
    } catch (const NotClearedError&) {
      continue;
    }
    CHECK(reduce(*a, rs) == reduce(*b, rs));
    ++tested;
  }
  CHECK(tested > 100);
}
