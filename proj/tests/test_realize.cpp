#include <doctest.h>

#include <optional>

#include "mdiag/constructions.hpp"
#include "mdiag/errors.hpp"
#include "mdiag/model_library.hpp"
#include "mdiag/parser.hpp"
#include "mdiag/random_expr.hpp"
#include "mdiag/realize.hpp"
#include "mdiag/relations.hpp"

using namespace mdiag;

namespace {

int index_of(const CohomModel& m, const std::string& basis) {
  const auto& names = m.data().basis_names;
  return static_cast<int>(std::find(names.begin(), names.end(), basis) - names.begin());
}

TensorClass basis_tensor(const CohomModel& m, std::initializer_list<const char*> slots, Rational c = 1) {
  std::vector<int> idx;
  for (const char* s : slots) idx.push_back(index_of(m, s));
  TensorClass t(static_cast<int>(idx.size()));
  t.add(TensorClass::pack(idx), c);
  return t;
}

}  // namespace

TEST_CASE("diagonal tensors") {
  auto p1 = models::builtin("p1");
  CHECK(diagonal_tensor(*p1) == basis_tensor(*p1, {"pt", "1"}) + basis_tensor(*p1, {"1", "pt"}));
  CHECK(diagonal_tensor(*models::builtin("k3")).size() == 24);
  CHECK(diagonal_tensor(*models::builtin("abelian-surface")).size() == 16);
}

TEST_CASE("the diagonal acts as the identity correspondence") {
  for (const auto& name : models::builtin_names()) {
    CAPTURE(name);
    auto m = models::builtin(name);
    const TensorClass d = diagonal_tensor(*m);
    for (int a = 0; a < m->rank(); ++a) {
      const TensorClass x = slot_class(1, 0, SparseVec{{a, 1}}, *m);
      CHECK(apply(d, x, *m) == x);
    }
    CHECK(compose(d, d, *m) == d);
    CHECK(realize(CycleExpr::generator(2, m->variety(), Generator::diagonal(0, 1)), *m) == d);
  }
}

TEST_CASE("graded commutativity") {
  auto g2 = models::builtin("genus2");
  const auto x = slot_class(2, 0, {{index_of(*g2, "alpha1"), 1}}, *g2);
  const auto y = slot_class(2, 1, {{index_of(*g2, "beta1"), 1}}, *g2);
  CHECK(multiply(x, y, *g2) == Rational(-1) * multiply(y, x, *g2));
  const auto u = slot_class(1, 0, {{index_of(*g2, "alpha1"), 1}}, *g2);
  const auto v = slot_class(1, 0, {{index_of(*g2, "beta1"), 1}}, *g2);
  CHECK(multiply(u, v, *g2) == Rational(-1) * multiply(v, u, *g2));
  CHECK_FALSE(is_zero(multiply(u, v, *g2)));
  CHECK(is_zero(multiply(u, u, *g2)));
}

TEST_CASE("threshold examples") {
  auto pt = [](int m, const CohomPtr& c) { return realize(gamma_m(m, "pt", c->variety()), *c); };
  CHECK(is_zero(pt(2, models::builtin("p1"))));
  auto ell = models::builtin("elliptic");
  CHECK(is_zero(pt(3, ell)));
  CHECK_FALSE(is_zero(pt(2, ell)));
  auto k3 = models::builtin("k3");
  CHECK(is_zero(pt(3, k3)));
  CHECK_FALSE(is_zero(pt(2, k3)));
  auto ab = models::builtin("abelian-surface");
  CHECK(is_zero(pt(5, ab)));
  CHECK_FALSE(is_zero(pt(4, ab)));
  CHECK(is_zero(Rational(0) * pt(2, k3)));
}

TEST_CASE("realize is a ring morphism") {
  struct Case {
    const char* model;
    int cases;
  };
  std::mt19937_64 rng(kDefaultSeed);
  for (const Case c : {Case{"p1", 500}, Case{"genus2", 500}, Case{"surface-b2-3", 500}, Case{"abelian-surface", 500},
                       Case{"k3", 100}}) {
    CAPTURE(c.model);
    auto m = models::builtin(c.model);
    auto V = m->variety();
    for (int t = 0; t < c.cases; ++t) {
      RandomExprConfig rc = RandomExprConfig::for_model(*V, uniform(rng, 1, 3));
      rc.max_pieces = 2;
      rc.max_terms = 2;
      const CycleExpr e = random_expr(rng, V, rc), f = random_expr(rng, V, rc);
      const TensorClass re = realize(e, *m), rf = realize(f, *m);
      CHECK(realize(e * f, *m) == multiply(re, rf, *m));
      CHECK(realize(e - e, *m).is_zero());
      if (e.codim() == f.codim()) CHECK(realize(e + f, *m) == re + rf);
      if (auto deg = degree(re, *m)) CHECK(*deg == 2 * *e.codim());
    }
  }
}

TEST_CASE("realize commutes with pullback and pushforward") {
  std::mt19937_64 rng(kDefaultSeed + 1);
  const auto rs = relations::trivial();
  for (const char* name : {"elliptic", "genus2", "surface-b2-2", "abelian-surface"}) {
    CAPTURE(name);
    auto m = models::builtin(name);
    auto V = m->variety();
    int pushed = 0;
    for (int t = 0; t < 150; ++t) {
      const int k = uniform(rng, 1, 3), mm = uniform(rng, k, 4);
      const auto place = random_placement(rng, k, mm);
      RandomExprConfig rc = RandomExprConfig::for_model(*V, k);
      rc.max_pieces = 2;
      const CycleExpr e = random_expr(rng, V, rc);
      CHECK(realize(pullback(e, place, mm), *m) == pullback(realize(e, *m), place, mm, *m));

      RandomExprConfig rf = RandomExprConfig::for_model(*V, uniform(rng, 2, 4));
      rf.max_pieces = 3;
      const CycleExpr f = random_expr(rng, V, rf);
      const int i = uniform(rng, 0, f.arity() - 1);
      std::optional<CycleExpr> pushed_f;
      try {
        pushed_f = pushforward_forget(f, i, rs);
      } catch (const NotClearedError&) {
      }
      if (pushed_f) {
        CHECK(realize(*pushed_f, *m) == contract(realize(f, *m), i, *m));
        ++pushed;
      }
    }
    CHECK(pushed > 40);
  }
}

TEST_CASE("involution models") {
  auto m = models::involution_model(2, 2, 3);
  const auto& iota = *m->data().involution;
  for (int a = 0; a < m->rank(); ++a)
    for (int b = 0; b < m->rank(); ++b) {
      Rational s = 0;
      for (int c = 0; c < m->rank(); ++c) s += iota[a][c] * iota[c][b];
      CHECK(s == (a == b ? 1 : 0));
    }
  auto V = m->variety();
  const auto G = realize(CycleExpr::generator(2, V, Generator::invol_graph(0, 1)), *m);
  const auto D = realize(CycleExpr::generator(2, V, Generator::diagonal(0, 1)), *m);
  CHECK(realize(CycleExpr::generator(2, V, Generator::pi_diagonal(0, 1)), *m) == D + G);
  CHECK(realize(CycleExpr::generator(2, V, Generator::sigma({0, 1})), *m) == G);
  CHECK(realize(CycleExpr::generator(3, V, Generator::sigma({0, 1, 2})), *m).is_zero());
  CHECK(compose(G, G, *m) == D);

  const CycleExpr lhs = delta_pm(3, V, 0, 1, -1) * delta_pm(3, V, 0, 2, -1) - delta_pm(3, V, 0, 1, 1) * delta_pm(3, V, 1, 2, -1);
  CHECK(is_zero(realize(lhs, *m)));
  CHECK(is_zero(realize(parse_expr("b(1)", V, 3) * delta_pm(3, V, 1, 2, -1), *m)));
  // the odd part alone is not zero
  CHECK_FALSE(is_zero(realize(delta_pm(2, V, 0, 1, -1), *m)));

  auto curve = models::involution_model(1, 2, 2);
  CHECK(curve->albanese() == 1);
  CHECK_THROWS_AS(models::involution_model(1, 1, 2), ConfigError);
  CHECK_THROWS_AS(models::involution_model(3, 1, 1), UnsupportedModelError);
}

TEST_CASE("realize errors") {
  auto p1 = models::builtin("p1");
  auto X = generic_variety(1);
  CHECK_THROWS_AS(realize(CycleExpr::generator(2, X, Generator::pi_diagonal(0, 1)), *p1), UnsupportedModelError);
  VarietyModel v = *p1->variety();
  v.symbols["zz"] = SymbolRole::Point;
  CHECK_THROWS_AS(realize(CycleExpr::generator(1, make_variety(v), Generator::point(0, "zz")), *p1),
                  UnknownSymbolError);
  CHECK_THROWS_AS(TensorClass(9), ArityError);
}

TEST_CASE("model validation") {
  auto base = models::builtin_data("surface-b2-3");
  {
    auto d = base;
    d.pairing[1][1] = 0;
    d.pairing[1][2] = 0;
    d.pairing[2][1] = 0;
    CHECK_THROWS_AS(CohomModel::build(d), ConfigError);
  }
  {
    auto d = base;
    d.degrees[1] = 1;
    CHECK_THROWS_AS(CohomModel::build(d), ConfigError);
  }
  {
    auto d = base;
    Matrix m(d.degrees.size(), std::vector<Rational>(d.degrees.size(), Rational(0)));
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
    m[1][1] = 2;
    d.involution = m;
    CHECK_THROWS_AS(CohomModel::build(d), ConfigError);
  }
  {
    auto d = base;
    d.classes["o"] = {{d.degrees.size() - 1, 2}};
    CHECK_THROWS_AS(CohomModel::build(d), ConfigError);
  }
  CHECK_THROWS_AS(models::builtin("nope"), ConfigError);
}

TEST_CASE("euler characteristics and betti numbers") {
  CHECK(models::builtin("k3")->euler() == 24);
  CHECK(models::builtin("abelian-surface")->euler() == 0);
  CHECK(models::builtin("genus2")->betti() == std::vector<int>{1, 4, 1});
  CHECK(models::builtin("surface-b2-4")->euler() == 6);
}
