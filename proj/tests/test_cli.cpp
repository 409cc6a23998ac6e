#include <doctest.h>

#include <filesystem>
#include <json.hpp>

#include "mdiag/checks.hpp"
#include "mdiag/constructions.hpp"
#include "mdiag/errors.hpp"
#include "mdiag/model_library.hpp"
#include "mdiag/parser.hpp"
#include "mdiag/printer.hpp"
#include "mdiag/proof_replay.hpp"
#include "mdiag/random_expr.hpp"
#include "mdiag/realize.hpp"
#include "mdiag/report.hpp"

using namespace mdiag;

namespace {

const ModelPtr X = generic_variety(2);

CycleExpr gen(int m, Generator g) { return CycleExpr::generator(m, X, std::move(g)); }

}  // namespace

TEST_CASE("parser basics") {
  CHECK(parse_expr("D(0,1) - a(1)", X, 2) == gen(2, Generator::diagonal(0, 1)) - gen(2, Generator::point(1, "a")));
  CHECK(parse_expr("gamma(3; a)", X) == gamma_m(3, "a", X));
  CHECK(parse_expr("gamma1(2;a)", X) == gamma_1m(2, "a", X));
  CHECK(parse_expr("smalldiag(0,1,2)", X) == parse_expr("D(0,1)*D(0,2)", X));
  CHECK(parse_expr("star(a; 0, 2)", X) == parse_expr("a(0)*a(2)", X));
  CHECK(parse_expr("sigma_b(1,2;b)", X) == sigma_b_expansion(1, 2, "b", X));
  CHECK(parse_expr("2 D(0,1)", X) == Rational(2) * parse_expr("D(0,1)", X));
  CHECK(parse_expr("-1/2*L(0)*K(1) + 3*(D(0,1) - a(0))", X) ==
        parse_expr("3*D(0,1) - 3*a(0) - 1/2*L(0)*K(1)", X));
  CHECK(parse_expr("1", X, 2) == CycleExpr::one(2, X));
  CHECK(parse_expr("0", X, 2).is_zero());
  CHECK(parse_expr("L(0)*K(1)", X).arity() == 2);
  CHECK(parse_expr("D(0,1)", X, 4).arity() == 4);
  CHECK(parse_expr("gamma(2;a)", X, 3) == pullback(gamma_m(2, "a", X), std::vector<int>{0, 1}, 3));
  auto V = double_cover_variety();
  CHECK(parse_expr("deltapm(0,1,-)", V) == delta_pm(2, V, 0, 1, -1));
  CHECK(parse_expr("tpD(1,0;b)", V) == CycleExpr::generator(2, V, Generator::twisted_pi_diagonal(1, 0, "b")));
  auto s = models::builtin("surface-b2-3")->variety();
  CHECK(parse_expr("kimura(1)", s) == kimura_class(1, s));
  CHECK(parse_expr("delta0(0,1)", s) == delta0(2, s, 0, 1));
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_expr("D(1,1)", X), ArityError);
  CHECK_THROWS_AS(parse_expr("D(0,3)", X, 2), ArityError);
  CHECK_THROWS_AS(parse_expr("zz(0)", X), UnknownSymbolError);
  CHECK_THROWS_AS(parse_expr("a(0) + L(0)", X), HomogeneityError);
  CHECK_THROWS_AS(parse_expr("Sig2(0,1)", X), ArityError);
  try {
    parse_expr("D(0,1) + a(", X);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 11);
  }
  try {
    parse_expr("D(0,1) $ a(0)", X);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_expr("", X), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0*a(0)", X), ParseError);
  CHECK_THROWS_AS(parse_expr("deltapm(0,1,*)", double_cover_variety()), ParseError);
}

TEST_CASE("printer") {
  CHECK(to_text(parse_expr("D(1,0) - 1/2*a(1)", X)) == "D(0,1) - 1/2*a(1)");
  CHECK(to_text(CycleExpr(2, X)) == "0");
  CHECK(to_text(CycleExpr::one(2, X)) == "1");
  CHECK(to_text(Generator::sigma({2, 0, 1})) == "Sig2(0,1,2)");
  CHECK(to_text(Generator::twisted_pi_diagonal(1, 0, "b")) == "tpD(1,0;b)");
}

TEST_CASE("grammar round trip on random expressions") {
  std::mt19937_64 rng(kDefaultSeed);
  auto V = double_cover_variety();
  for (int t = 0; t < 1000; ++t) {
    const ModelPtr model = t % 2 ? V : X;
    RandomExprConfig rc = RandomExprConfig::for_model(*model, uniform(rng, 1, 6));
    rc.pi_diagonals = model->has_involution;
    rc.max_pieces = 4;
    rc.max_terms = 5;
    const CycleExpr e = random_expr(rng, model, rc);
    CHECK(parse_expr(to_text(e), model, e.arity()) == e);
  }
}

TEST_CASE("check registry") {
  const auto& reg = check_registry();
  REQUIRE(reg.size() == 11);
  CHECK(reg.front().name == "gamma-pushforward");
  CHECK(reg.back().name == "core-properties");
  const auto names = check_names();
  CHECK(std::find(names.begin(), names.end(), "ogrady-threshold:abelian-surface") != names.end());
  CHECK_THROWS_AS(run_check("nonexistent"), UnknownCheckError);
  CHECK_THROWS_AS(run_check("ogrady-threshold:nope"), UnknownCheckError);
  CHECK_THROWS_AS(run_checks({"bv-gamma3", "nonexistent"}), UnknownCheckError);
  CHECK(run_check("bv-gamma3").status == CheckStatus::Pass);
  CHECK(run_check("ogrady-threshold:abelian-surface").status == CheckStatus::Pass);
  CHECK(run_check("ogrady-threshold:involution:2:1:1").status == CheckStatus::Pass);
}

TEST_CASE("reports") {
  CHECK(exit_status({}) == 0);
  const auto empty = nlohmann::json::parse(emit_report({}, ReportFormat::Json));
  CHECK(empty["checks"].empty());
  CHECK(empty["summary"]["total"] == 0);

  CheckReport pass{"x", CheckStatus::Pass, "", 1.5, {{"k", "v"}}};
  CheckReport fail{"y", CheckStatus::Fail, "D(0,1)", 0.25, {}};
  CheckReport skip{"z", CheckStatus::Skipped, "", 0, {}};
  CHECK(exit_status({pass, skip}) == 0);
  CHECK(exit_status({pass, fail}) == 1);
  const auto doc = nlohmann::json::parse(emit_report({pass, fail, skip}, ReportFormat::Json));
  CHECK(doc["checks"][1]["witness"] == "D(0,1)");
  CHECK(doc["summary"]["failed"] == 1);
  CHECK(emit_report({pass, fail}, ReportFormat::Human).find("FAIL  y") != std::string::npos);

  // timings differ between runs, the machine report must not
  const std::vector<std::string> names{"binomial-lemma", "gamma1-factorization", "bv-gamma3"};
  const auto a = emit_report(run_checks(names), ReportFormat::Json);
  const auto b = emit_report(run_checks(names, {}, true), ReportFormat::Json);
  CHECK(a == b);
}

TEST_CASE("randomized checks follow the seed") {
  CheckConfig cfg;
  cfg.cases = 40;
  const auto a = run_check("core-properties", cfg);
  CHECK(a.status == CheckStatus::Pass);
  cfg.seed = 7;
  const auto b = run_check("core-properties", cfg);
  CHECK(b.status == CheckStatus::Pass);
  CHECK(a.parameters != b.parameters);
}

TEST_CASE("bundled model files match the built-in models") {
  for (const auto& name : models::builtin_names()) {
    CAPTURE(name);
    const auto path = models::data_dir() / (name + ".json");
    REQUIRE(std::filesystem::exists(path));
    auto file = models::load(path);
    auto code = models::builtin(name);
    CHECK(file->data().degrees == code->data().degrees);
    CHECK(file->data().basis_names == code->data().basis_names);
    CHECK(file->data().pairing == code->data().pairing);
    CHECK(file->data().classes == code->data().classes);
    CHECK(file->data().involution == code->data().involution);
    CHECK(file->albanese() == code->albanese());
    for (int a = 0; a < code->rank(); ++a)
      for (int b = 0; b < code->rank(); ++b) CHECK(file->product(a, b) == code->product(a, b));
    CHECK(models::to_json_text(file->data()) == models::to_json_text(code->data()));
  }
}

TEST_CASE("model JSON round trip and errors") {
  auto d = models::involution_data(2, 1, 2);
  auto back = models::data_from_json_text(models::to_json_text(d));
  CHECK(back.involution == d.involution);
  CHECK(back.pairing == d.pairing);
  CHECK_THROWS_AS(models::data_from_json_text("{}"), ConfigError);
  CHECK_THROWS_AS(models::data_from_json_text(R"({"name":"x","dimension":1,"betti":[1,0]})"), ConfigError);
  CHECK_THROWS_AS(models::load("/nonexistent/model.json"), ConfigError);
}
