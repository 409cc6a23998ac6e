#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mdiag/combinatorics.hpp"
#include "mdiag/constructions.hpp"
#include "mdiag/errors.hpp"
#include "mdiag/model_library.hpp"
#include "mdiag/parser.hpp"
#include "mdiag/proof_replay.hpp"
#include "mdiag/realize.hpp"
#include "mdiag/relations.hpp"

using namespace mdiag;

namespace {

const ModelPtr X = generic_variety(2);

CycleExpr parse(const std::string& text, int arity, ModelPtr model = X) { return parse_expr(text, model, arity); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

}  // namespace

TEST_CASE("star_power") {
  const std::vector<int> I{1, 2}, J{0}, K{0, 3};
  CHECK(star_power(3, X, "a", I) == parse("a(1)*a(2)", 3));
  CHECK(star_power(1, X, "a", J) == parse("a(0)", 1));
  const std::vector<int> IJ{1, 2, 0, 3};
  CHECK(star_power(4, X, "a", I) * star_power(4, X, "a", K) == star_power(4, X, "a", IJ));
}

TEST_CASE("small_diagonal") {
  const std::vector<int> J{0, 1, 2}, single{5};
  CHECK(small_diagonal(3, X, J) == parse("D(0,1)*D(0,2)", 3));
  CHECK(small_diagonal(6, X, single) == CycleExpr::one(6, X));
  const auto rs = relations::trivial();
  std::vector<int> base{0, 1, 2, 3};
  const CycleExpr ref = reduce(small_diagonal(4, X, base), rs);
  std::vector<int> sigma = base;
  do {
    CHECK(reduce(permute(small_diagonal(4, X, base), sigma), rs) == ref);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST_CASE("gamma_m") {
  CHECK(gamma_m(2, "a", X) == parse("D(0,1) - a(0) - a(1)", 2));
  CHECK(gamma_m(3, "a", X) ==
        parse("D(0,1)*D(0,2) - a(0)*D(1,2) - a(1)*D(0,2) - a(2)*D(0,1) + a(0)*a(1) + a(0)*a(2) + a(1)*a(2)", 3));
  for (int m = 2; m <= 7; ++m) CHECK(gamma_m(m, "a", X).size() == (1u << m) - 1);
  CHECK_THROWS_AS(gamma_m(1, "a", X), ArityError);
}

TEST_CASE("gamma_1m") {
  CHECK(gamma_1m(1, "a", X) == parse("D(0,1) - a(1)", 2));
  CHECK_THROWS_AS(gamma_1m(0, "a", X), ArityError);
  const auto rs = relations::trivial();
  for (int m = 2; m <= 5; ++m) {
    CHECK(reduce(pushforward_forget(gamma_1m(m, "a", X), 0, rs) - gamma_m(m, "a", X), rs).is_zero());
    const CycleExpr tail = pullback(gamma_m(m, "a", X), range(1, m + 1), m + 1);
    CHECK(gamma_m(m + 1, "a", X) == gamma_1m(m, "a", X) - parse("a(0)", m + 1) * tail);
  }
}

TEST_CASE("gamma_1m factorization") {
  for (int k = 1; k <= 3; ++k)
    for (int kk = 1; kk <= 3; ++kk) {
      std::vector<int> right = range(k, k + kk + 1);
      right[0] = 0;
      CHECK(gamma_1m(k + kk, "a", X) == pullback(gamma_1m(k, "a", X), range(0, k + 1), k + kk + 1) *
                                            pullback(gamma_1m(kk, "a", X), right, k + kk + 1));
    }
}

TEST_CASE("delta_pm") {
  auto V = double_cover_variety();
  CHECK(delta_pm(3, V, 0, 2, 1) + delta_pm(3, V, 0, 2, -1) == Rational(2) * parse("D(0,2)", 3, V));
  CHECK_THROWS_AS(delta_pm(2, X, 0, 1, 1), UnsupportedModelError);
}

TEST_CASE("sigma_b_expansion") {
  CHECK(sigma_b_expansion(1, 2, "b", X) == parse("Sig1(0,1) - b(1)", 2));
  // k = 2, d = 3: lambda_{2,0,3} = 2, lambda_{2,1,3} = 1
  CHECK(sigma_b_expansion(2, 3, "b", X) == parse("Sig2(0,1,2) - Sig1(0,1)*b(2) - Sig1(0,2)*b(1) + 2*b(1)*b(2)", 3));
  for (int d = 2; d <= 4; ++d) CHECK(reduce(sigma_b_expansion(d, d, "b", X), relations::cover_degree(d)).is_zero());
}

TEST_CASE("delta0 and kimura_class expressions") {
  auto k0 = models::builtin("surface-b2-2-k0")->variety();
  CHECK(delta0(2, k0, 0, 1) == parse("D(0,1) - pt(0) - pt(1)", 2, k0));
  auto s = models::builtin("surface-b2-2")->variety();
  CHECK(delta0(2, s, 0, 1) == parse("D(0,1) - pt(0) - pt(1) - 1/8*K(0)*K(1)", 2, s));
  const CycleExpr k1 = kimura_class(1, k0);
  CHECK(k1 == delta0(4, k0, 0, 2) * delta0(4, k0, 1, 3) - delta0(4, k0, 0, 3) * delta0(4, k0, 1, 2));
  CHECK_THROWS_AS(kimura_class(0, k0), ArityError);

  VarietyModel bad = *s;
  bad.intersections.clear();
  bad.set_intersection("K", "K", 0);
  CHECK_THROWS_AS(delta0(2, make_variety(bad), 0, 1), UnsupportedModelError);
}

TEST_CASE("realize(delta0) is the projector onto the orthogonal complement of K in H^2") {
  for (const char* name : {"surface-b2-2", "surface-b2-3", "surface-b2-4", "surface-b2-3-k0"}) {
    CAPTURE(name);
    auto cohom = models::builtin(name);
    const TensorClass p = realize(delta0(2, cohom->variety(), 0, 1), *cohom);
    SparseVec K;
    if (cohom->has_class("K")) K = cohom->class_vector("K");
    auto dot = [&](const SparseVec& x, const SparseVec& y) {
      Rational s = 0;
      for (const auto& [a, u] : x)
        for (const auto& [b, v] : y) s += u * v * cohom->pairing(a, b);
      return s;
    };
    const Rational kk = K.empty() ? Rational(1) : dot(K, K);
    for (int a = 0; a < cohom->rank(); ++a) {
      SparseVec x{{a, 1}};
      SparseVec expected;
      if (cohom->degree(a) == 2) {
        expected = x;
        const Rational c = K.empty() ? Rational(0) : dot(x, K) / kk;
        for (const auto& [b, v] : K) expected[b] -= c * v;
        std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
      }
      CHECK(apply(p, slot_class(1, 0, x, *cohom), *cohom) == slot_class(1, 0, expected, *cohom));
    }
    CHECK(compose(p, p, *cohom) == p);
  }
}

TEST_CASE("kimura_class vanishes exactly up to dim H^2_perp") {
  auto k0 = models::builtin("surface-b2-2-k0");
  CHECK(is_zero(realize(kimura_class(2, k0->variety()), *k0)));
  CHECK_FALSE(is_zero(realize(kimura_class(1, k0->variety()), *k0)));
  auto b22 = models::builtin("surface-b2-2");
  CHECK(is_zero(realize(kimura_class(1, b22->variety()), *b22)));
}

TEST_CASE("involution oddness") {
  auto V = double_cover_variety();
  const auto rs = relations::cover_double({}, {"b"});
  const std::set<std::string> inv{"b"};
  CycleExpr odd = delta_pm(4, V, 0, 1, -1) * delta_pm(4, V, 0, 2, -1) * delta_pm(4, V, 0, 3, -1);
  CHECK(involution_pullback(odd, 0, inv) == -odd);
  CHECK(involution_pullback(delta_pm(2, V, 0, 1, 1), 0, inv) == delta_pm(2, V, 0, 1, 1));
  for (int m = 2; m <= 3; ++m) {
    const int N = 2 * m - 1;
    CycleExpr prod = CycleExpr::one(N + 1, V);
    for (int i = 1; i <= N; ++i) prod = prod * delta_pm(N + 1, V, 0, i, -1);
    CHECK(involution_oddness_pushforward(prod, rs).is_zero());
  }
  // an even class is pushed forward honestly
  const CycleExpr even = delta_pm(2, V, 0, 1, 1);
  CHECK(involution_oddness_pushforward(even, rs) == Rational(2) * CycleExpr::one(1, V));
  CHECK_THROWS_AS(involution_pullback(parse("a(0)", 1, V), 0, inv), UnsupportedModelError);
}

TEST_CASE("proof replays") {
  for (int m = 2; m <= 3; ++m) {
    const ReplayResult r = replay_double_cover(m);
    CHECK_MESSAGE(r.ok(), r.failure());
    CHECK(r.steps.size() >= 5);
  }
  for (int d = 2; d <= 5; ++d) {
    for (int k = 1; k <= 4; ++k) {
      const ReplayResult r = sigma_claim(k, d);
      CHECK_MESSAGE(r.ok(), r.failure());
    }
    for (int k = 1; k <= 3; ++k) {
      const ReplayResult r = sigma_b_claim(k, d);
      CHECK_MESSAGE(r.ok(), r.failure());
    }
    CHECK(sigma_b_vanishing(d).ok());
  }
}

TEST_CASE("the sigma claim fails with the wrong scalar") {
  std::vector<int> all{0, 1, 2};
  const CycleExpr e = Rational(combinatorics::alpha(2) + 1) * small_diagonal(3, X, all) -
                      CycleExpr::generator(3, X, Generator::sigma(all));
  const std::vector<DropRule> E{relations::e_ideal()};
  CHECK_FALSE(quotient_ideal(reduce(e, relations::cover_degree(4)), E).is_zero());
}
