#include "mdiag/checks.hpp"

#include <chrono>
#include <future>
#include <numeric>

#include "mdiag/combinatorics.hpp"
#include "mdiag/constructions.hpp"
#include "mdiag/errors.hpp"
#include "mdiag/model_library.hpp"
#include "mdiag/parser.hpp"
#include "mdiag/printer.hpp"
#include "mdiag/proof_replay.hpp"
#include "mdiag/realize.hpp"
#include "mdiag/relations.hpp"

namespace mdiag {

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

constexpr std::size_t kWitnessChars = 400;

std::string clip(std::string s) {
  if (s.size() > kWitnessChars) s = s.substr(0, kWitnessChars) + " ...";
  return s;
}

// Accumulates the outcome of one check; keeps the first failure.
struct Outcome {
  bool ok = true;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> parameters;

  void fail(const std::string& what) {
    if (ok) witness = clip(what);
    ok = false;
  }
  void expect_zero(const std::string& label, const CycleExpr& residue) {
    if (!residue.is_zero()) fail(label + ": " + to_text(residue));
  }
  void expect_equal(const std::string& label, const CycleExpr& lhs, const CycleExpr& rhs) {
    if (!(lhs == rhs)) fail(label + ": lhs - rhs = " + to_text(lhs - rhs));
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void replay(const std::string& label, const ReplayResult& r) {
    if (!r.ok()) fail(label + " " + r.failure());
  }
  void param(std::string k, std::string v) { parameters.emplace_back(std::move(k), std::move(v)); }

  CheckReport report() const {
    CheckReport r;
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.witness = witness;
    r.parameters = parameters;
    return r;
  }
};

std::string str(int v) { return std::to_string(v); }

std::vector<int> iota_from(int start, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), start);
  return v;
}

// ---- gamma-pushforward --------------------------------------------------

CheckReport gamma_pushforward(const CheckConfig&) {
  Outcome o;
  auto model = generic_variety(2);
  const auto rs = relations::trivial();
  for (int m = 2; m <= 5; ++m) {
    const CycleExpr g1 = gamma_1m(m, "a", model);
    o.expect_zero("pushforward m=" + str(m), reduce(pushforward_forget(g1, 0, rs) - gamma_m(m, "a", model), rs));
    const CycleExpr a0 = CycleExpr::generator(m + 1, model, Generator::point(0, "a"));
    const CycleExpr tail = pullback(gamma_m(m, "a", model), iota_from(1, m), m + 1);
    o.expect_zero("recursion m=" + str(m), reduce(gamma_m(m + 1, "a", model) - (g1 - a0 * tail), rs));
  }
  o.param("m", "2..5");
  o.param("relations", "trivial");
  return o.report();
}

// ---- gamma1-factorization -----------------------------------------------

CheckReport gamma1_factorization(const CheckConfig&) {
  Outcome o;
  auto model = generic_variety(2);
  for (int k = 1; k <= 3; ++k) {
    for (int kk = 1; kk <= 3; ++kk) {
      const int arity = k + kk + 1;
      std::vector<int> left = iota_from(0, k + 1);
      std::vector<int> right = iota_from(k, kk + 1);
      right[0] = 0;
      const CycleExpr lhs = gamma_1m(k + kk, "a", model);
      const CycleExpr rhs = pullback(gamma_1m(k, "a", model), left, arity) * pullback(gamma_1m(kk, "a", model), right, arity);
      o.expect_equal("k=" + str(k) + " k'=" + str(kk), lhs, rhs);
    }
  }
  o.param("k", "1..3");
  o.param("k'", "1..3");
  return o.report();
}

// ---- bv-gamma3 ----------------------------------------------------------

CheckReport bv_gamma3(const CheckConfig&) {
  Outcome o;
  auto model = generic_variety(2);
  relations::BvParams p;
  const auto rs = relations::bv_k3(p);
  o.expect_zero("Gamma^3(S,o)", reduce(gamma_m(3, "o", model), rs));
  const CycleExpr d01 = CycleExpr::generator(2, model, Generator::diagonal(0, 1));
  const CycleExpr oo = CycleExpr::generator(2, model, Generator::point(0, "o")) *
                       CycleExpr::generator(2, model, Generator::point(1, "o"));
  o.expect_equal("Delta^2", reduce(d01 * d01, rs), Rational(24) * oo);
  o.param("relations", "bv_k3");
  o.param("euler", "24");
  return o.report();
}

// ---- yin-normal-form ----------------------------------------------------

bool has_repeated_index(const CycleExpr& e) {
  for (const auto& [m, c] : e.terms())
    if (repeated_index_count(m) > 0) return true;
  return false;
}

CheckReport yin_normal_form(const CheckConfig& cfg) {
  Outcome o;
  struct Ctx {
    CohomPtr cohom;
    RelationSet rs;
  };
  std::vector<Ctx> ctx;
  for (const char* name : {"surface-b2-2", "surface-b2-3", "surface-b2-4"}) {
    auto cohom = models::builtin(name);
    relations::BvParams p = relations::default_params(*cohom->variety()).bv;
    p.point = "o";
    p.euler = cohom->euler();
    ctx.push_back({cohom, relations::bv_k3(p)});
  }
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.cases && o.ok; ++t) {
    const Ctx& c = ctx[t % ctx.size()];
    const auto model = c.cohom->variety();
    RandomExprConfig rc = RandomExprConfig::for_model(*model, uniform(rng, 2, 5));
    rc.points = {"o"};
    const CycleExpr e = random_expr(rng, model, rc);
    const CycleExpr r = reduce(e, c.rs);
    if (has_repeated_index(r)) o.fail(c.cohom->name() + ": " + to_text(e) + " -> " + to_text(r));
    const TensorClass diff = realize(e, *c.cohom) - realize(r, *c.cohom);
    if (!is_zero(diff)) o.fail(c.cohom->name() + ": realize changed for " + to_text(e) + ": " + to_text(diff, *c.cohom));
  }
  o.param("cases", str(cfg.cases));
  o.param("seed", std::to_string(cfg.seed));
  o.param("models", "surface-b2-2,surface-b2-3,surface-b2-4");
  o.param("N", "2..5");
  return o.report();
}

// ---- kimura-vanishing ---------------------------------------------------

CheckReport kimura_vanishing(const CheckConfig&) {
  Outcome o;
  int zero_cases = 0, nonzero_cases = 0;
  for (const char* name : {"surface-b2-2", "surface-b2-3", "surface-b2-4", "surface-b2-2-k0", "surface-b2-3-k0"}) {
    auto cohom = models::builtin(name);
    const int perp = cohom->betti()[2] - (cohom->has_class("K") ? 1 : 0);
    for (int M = 1; M <= 2; ++M) {
      if (perp > M + 1) continue;
      const TensorClass t = realize(kimura_class(M, cohom->variety()), *cohom);
      const std::string tag = std::string(name) + " M=" + str(M) + " dim=" + str(perp);
      if (perp <= M) {
        ++zero_cases;
        o.expect(is_zero(t), tag + ": expected 0, got " + to_text(t, *cohom));
      } else {
        ++nonzero_cases;
        o.expect(!is_zero(t), tag + ": expected a nonzero class");
      }
    }
  }
  o.param("M", "1,2");
  o.param("zero_cases", str(zero_cases));
  o.param("nonzero_cases", str(nonzero_cases));
  return o.report();
}

// ---- ogrady-thresholds --------------------------------------------------

const std::vector<std::string>& threshold_models() {
  static const std::vector<std::string> names = {"p1",           "elliptic", "genus2", "surface-b2-2",
                                                 "surface-b2-3", "k3",       "abelian-surface"};
  return names;
}

Outcome ogrady_threshold(const CohomModel& cohom) {
  Outcome o;
  const int n = cohom.dimension(), d = cohom.albanese();
  const auto model = cohom.variety();
  if (!model->has_symbol("pt")) {
    o.fail(cohom.name() + ": no point class 'pt'");
    return o;
  }
  for (int m = 1; m <= n + d; ++m) {
    const bool zero = is_zero(realize(gamma_m(m + 1, "pt", model), cohom));
    const bool expected = m >= n + d;
    if (zero != expected)
      o.fail(cohom.name() + ": Gamma^" + str(m + 1) + "(X,pt) is " + (zero ? "zero" : "nonzero") + " with n+d=" +
             str(n + d));
  }
  o.param("model", cohom.name());
  o.param("n", str(n));
  o.param("d", str(d));
  return o;
}

CheckReport ogrady_thresholds(const CheckConfig&) {
  Outcome o;
  std::string names;
  for (const auto& name : threshold_models()) {
    Outcome sub = ogrady_threshold(*models::builtin(name));
    if (!sub.ok) o.fail(sub.witness);
    names += (names.empty() ? "" : ",") + name;
  }
  o.param("models", names);
  return o.report();
}

// ---- double-cover-identities --------------------------------------------

CheckReport double_cover_identities(const CheckConfig& cfg) {
  Outcome o;
  {
    auto model = double_cover_variety();
    const auto rs = relations::cover_double({}, {"b"});
    const CycleExpr sign_lhs = delta_pm(3, model, 0, 1, -1) * delta_pm(3, model, 0, 2, -1) -
                            delta_pm(3, model, 0, 1, +1) * delta_pm(3, model, 1, 2, -1);
    o.expect_zero("symbolic sign product", reduce(sign_lhs, rs));
    const CycleExpr point_lhs = CycleExpr::generator(3, model, Generator::point(1, "b")) * delta_pm(3, model, 1, 2, -1);
    o.expect_zero("symbolic point product", reduce(point_lhs, rs));
  }
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.random_models; ++t) {
    const int n = uniform(rng, 1, 2);
    const int plus = n == 1 ? 2 * uniform(rng, 0, 2) : uniform(rng, 0, 4);
    const int minus = n == 1 ? 2 * uniform(rng, 0, 2) : uniform(rng, 0, 4);
    auto cohom = models::involution_model(n, plus, minus);
    auto model = cohom->variety();
    const CycleExpr sign_lhs = delta_pm(3, model, 0, 1, -1) * delta_pm(3, model, 0, 2, -1) -
                            delta_pm(3, model, 0, 1, +1) * delta_pm(3, model, 1, 2, -1);
    const TensorClass sign_t = realize(sign_lhs, *cohom);
    o.expect(is_zero(sign_t), cohom->name() + " sign product: " + to_text(sign_t, *cohom));
    const CycleExpr point_lhs = CycleExpr::generator(3, model, Generator::point(1, "b")) * delta_pm(3, model, 1, 2, -1);
    const TensorClass point_t = realize(point_lhs, *cohom);
    o.expect(is_zero(point_t), cohom->name() + " point product: " + to_text(point_t, *cohom));
  }
  o.param("relations", "cover_double");
  o.param("random_models", str(cfg.random_models));
  o.param("seed", std::to_string(cfg.seed));
  return o.report();
}

// ---- double-cover-replay ------------------------------------------------

CheckReport double_cover_replay(const CheckConfig&) {
  Outcome o;
  for (int m = 2; m <= 3; ++m) o.replay("m=" + str(m), replay_double_cover(m));
  o.param("m", "2,3");
  return o.report();
}

// ---- sigma-claims -------------------------------------------------------

CheckReport sigma_claims(const CheckConfig&) {
  Outcome o;
  for (int d = 2; d <= 5; ++d) {
    for (int k = 1; k <= 4; ++k) o.replay("Sigma k=" + str(k) + " d=" + str(d), sigma_claim(k, d));
    for (int k = 1; k <= 3; ++k) o.replay("Sigma^b k=" + str(k) + " d=" + str(d), sigma_b_claim(k, d));
    o.replay("Sigma^b_d d=" + str(d), sigma_b_vanishing(d));
  }
  o.param("d", "2..5");
  o.param("k", "1..4");
  o.param("k_b", "1..3");
  return o.report();
}

// ---- binomial-lemma -----------------------------------------------------

CheckReport binomial_lemma(const CheckConfig&) {
  Outcome o;
  for (unsigned d = 1; d <= 12; ++d) {
    for (unsigned s = 0; s <= 2 * d; ++s) {
      const Integer v = combinatorics::alt_power_sum(d, s);
      const bool zero = v == 0;
      const std::string tag = "d=" + std::to_string(d) + " s=" + std::to_string(s);
      o.expect(zero == (s + 2 <= d), tag + ": value " + v.get_str());
      const Integer oracle = combinatorics::factorial(d + 1) * combinatorics::stirling2(s + 2, d + 1);
      o.expect(v == oracle, tag + ": direct " + v.get_str() + " vs Stirling " + oracle.get_str());
    }
  }
  o.param("d", "1..12");
  o.param("s", "0..2d");
  return o.report();
}

// ---- core-properties ----------------------------------------------------

CheckReport core_properties(const CheckConfig& cfg) {
  Outcome o;
  std::mt19937_64 rng(cfg.seed);
  auto generic = generic_variety(2);
  auto cover = double_cover_variety();
  auto surface = models::builtin("surface-b2-3")->variety();
  relations::BvParams bv = relations::default_params(*surface).bv;
  bv.euler = 5;
  const RelationSet trivial = relations::trivial();
  const RelationSet bvk3 = relations::bv_k3(bv);

  auto gen = [&](const ModelPtr& model, int arity, int pieces) {
    RandomExprConfig rc = RandomExprConfig::for_model(*model, arity);
    rc.min_pieces = rc.max_pieces = pieces;
    rc.max_terms = 3;
    return random_expr(rng, model, rc);
  };

  for (int t = 0; t < cfg.cases && o.ok; ++t) {
    const std::string tag = "case " + str(t) + ": ";
    // ring axioms
    {
      const int m = uniform(rng, 1, 4);
      const CycleExpr a = gen(generic, m, uniform(rng, 1, 2));
      const CycleExpr b = gen(generic, m, uniform(rng, 1, 2));
      const int pc = uniform(rng, 1, 2);
      const CycleExpr c = gen(generic, m, pc), c2 = gen(generic, m, pc);
      o.expect_equal(tag + "associativity", (a * b) * c, a * (b * c));
      o.expect_equal(tag + "commutativity", a * b, b * a);
      o.expect_equal(tag + "distributivity", a * (c + c2), a * c + a * c2);
      o.expect_equal(tag + "unit", a * CycleExpr::one(m, generic), a);
      o.expect_equal(tag + "canonical fixed point", canonicalize(a * b), a * b);
    }
    // pullback functoriality
    {
      const int k = uniform(rng, 1, 3);
      const int m1 = uniform(rng, k, 4);
      const int m2 = uniform(rng, m1, 5);
      const auto p1 = random_placement(rng, k, m1);
      const auto p2 = random_placement(rng, m1, m2);
      std::vector<int> composed(k);
      for (int i = 0; i < k; ++i) composed[i] = p2[p1[i]];
      const CycleExpr e = gen(generic, k, uniform(rng, 1, 2));
      o.expect_equal(tag + "pullback functoriality", pullback(pullback(e, p1, m1), p2, m2), pullback(e, composed, m2));
    }
    // projection formula
    {
      const int m = uniform(rng, 2, 4);
      const int i = uniform(rng, 0, m - 1);
      std::vector<int> skip;
      for (int j = 0; j < m; ++j)
        if (j != i) skip.push_back(j);
      const CycleExpr e = gen(generic, m - 1, uniform(rng, 1, 2));
      bool done = false;
      for (int attempt = 0; attempt < 200 && !done; ++attempt) {
        const CycleExpr f = gen(generic, m, uniform(rng, 1, 3));
        try {
          const CycleExpr rhs = e * pushforward_forget(f, i, trivial);
          const CycleExpr lhs = pushforward_forget(pullback(e, skip, m) * f, i, trivial);
          o.expect_equal(tag + "projection formula", lhs, rhs);
          done = true;
        } catch (const NotClearedError&) {
        }
      }
      o.expect(done, tag + "no clearable sample for the projection formula");
    }
    // grammar round trip
    {
      const ModelPtr model = t % 2 ? cover : generic;
      RandomExprConfig rc = RandomExprConfig::for_model(*model, uniform(rng, 1, 5));
      rc.pi_diagonals = model->has_involution;
      rc.max_pieces = 4;
      const CycleExpr e = random_expr(rng, model, rc);
      const std::string text = to_text(e);
      try {
        o.expect_equal(tag + "round trip of '" + text + "'", parse_expr(text, model, e.arity()), e);
      } catch (const Error& err) {
        o.fail(tag + "round trip of '" + text + "' threw: " + err.what());
      }
    }
    // reduce termination (measure strictly decreasing) and idempotence
    {
      const bool use_bv = t % 2;
      const ModelPtr model = use_bv ? surface : generic;
      const RelationSet& rs = use_bv ? bvk3 : trivial;
      RandomExprConfig rc = RandomExprConfig::for_model(*model, uniform(rng, 2, 5));
      if (use_bv) rc.points = {"o"};
      const CycleExpr e = random_expr(rng, model, rc);
      ReduceOptions opts;
      opts.check_measure = true;
      try {
        const CycleExpr r = reduce(e, rs, opts);
        o.expect_equal(tag + "idempotence on " + to_text(e), reduce(r, rs, opts), r);
      } catch (const NonTerminationError& err) {
        o.fail(tag + rs.name + " on " + to_text(e) + ": " + err.what());
      }
    }
  }
  o.param("cases", str(cfg.cases));
  o.param("seed", std::to_string(cfg.seed));
  return o.report();
}

const std::string kThresholdPrefix = "ogrady-threshold:";

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = {
      {"gamma-pushforward", "p_* Gamma^{1,m} = Gamma^m and the Gamma^{m+1} recursion, m = 2..5", gamma_pushforward},
      {"gamma1-factorization", "Gamma^{1,k+k'} as a product of pulled back Gamma^{1,k}, Gamma^{1,k'}",
       gamma1_factorization},
      {"bv-gamma3", "Gamma^3(S,o) = 0 and Delta^2 = 24 o x o under bv_k3", bv_gamma3},
      {"yin-normal-form", "bv_k3 normal forms have no repeated index and keep their cohomology class",
       yin_normal_form},
      {"kimura-vanishing", "antisymmetrized primitive projector vanishes iff dim H^2_perp <= M", kimura_vanishing},
      {"ogrady-thresholds", "Gamma^{m+1}(X,pt) = 0 in cohomology iff m >= n + d", ogrady_thresholds},
      {"double-cover-identities", "Delta^- shuffles and b.Delta^- = 0, symbolically and in random models",
       double_cover_identities},
      {"double-cover-replay", "Gamma^{2m-1}(X,b) = 0 replayed for m = 2, 3", double_cover_replay},
      {"sigma-claims", "alpha_k prod Delta = Sigma_k mod E, the b-decorated analogue and Sigma^b_d = 0",
       sigma_claims},
      {"binomial-lemma", "alternating power sums vanish iff s <= d - 2, against Stirling numbers", binomial_lemma},
      {"core-properties", "ring axioms, projection formula, functoriality, round trip, reduce termination",
       core_properties},
  };
  return registry;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : check_registry()) {
    out.push_back(c.name);
    if (c.name == "ogrady-thresholds")
      for (const auto& m : threshold_models()) out.push_back(kThresholdPrefix + m);
  }
  return out;
}

CheckReport run_check(const std::string& name, const CheckConfig& config) {
  std::function<CheckReport(const CheckConfig&)> fn;
  for (const auto& c : check_registry())
    if (c.name == name) fn = c.run;
  if (!fn && name.rfind(kThresholdPrefix, 0) == 0) {
    CohomPtr cohom;
    try {
      cohom = models::resolve(name.substr(kThresholdPrefix.size()));
    } catch (const Error& e) {
      throw UnknownCheckError("unknown check '" + name + "': " + e.what());
    }
    fn = [cohom](const CheckConfig&) { return ogrady_threshold(*cohom).report(); };
  }
  if (!fn) throw UnknownCheckError("unknown check '" + name + "'");

  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = fn(config);
  } catch (const Error& e) {
    r.status = CheckStatus::Fail;
    r.witness = clip(std::string("error: ") + e.what());
  }
  r.name = name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const CheckConfig& config, bool parallel) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all")
      for (const auto& c : check_registry()) expanded.push_back(c.name);
    else
      expanded.push_back(n);
  }
  // Resolve names up front so an unknown name fails before any work starts.
  for (const auto& n : expanded) {
    bool known = false;
    for (const auto& c : check_registry()) known |= c.name == n;
    if (!known && n.rfind(kThresholdPrefix, 0) != 0) throw UnknownCheckError("unknown check '" + n + "'");
  }
  std::vector<CheckReport> out;
  if (!parallel) {
    for (const auto& n : expanded) out.push_back(run_check(n, config));
    return out;
  }
  std::vector<std::future<CheckReport>> jobs;
  for (const auto& n : expanded) jobs.push_back(std::async(std::launch::async, [n, &config] { return run_check(n, config); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace mdiag
