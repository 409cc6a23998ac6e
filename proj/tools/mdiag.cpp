#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <iostream>

#include "mdiag/checks.hpp"
#include "mdiag/errors.hpp"
#include "mdiag/model_library.hpp"
#include "mdiag/parser.hpp"
#include "mdiag/printer.hpp"
#include "mdiag/proof_replay.hpp"
#include "mdiag/realize.hpp"
#include "mdiag/relations.hpp"
#include "mdiag/report.hpp"

using namespace mdiag;

namespace {

struct Ambient {
  ModelPtr variety;
  CohomPtr cohom;
};

// "generic" and "double-cover" are purely symbolic; anything else is a
// cohomology model (builtin name or JSON file).
Ambient resolve_ambient(const std::string& name, int dimension) {
  if (name == "generic") return {generic_variety(dimension), nullptr};
  if (name == "double-cover") return {double_cover_variety(), nullptr};
  auto cohom = models::resolve(name);
  return {cohom->variety(), cohom};
}

std::optional<int> arity_opt(int arity) { return arity > 0 ? std::optional<int>(arity) : std::nullopt; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified diagonal calculator: symbolic cycles, rewriting and cohomological checks"};
  app.require_subcommand(1);

  std::string expr_text, model_name = "generic", relations_spec, output;
  int arity = 0, dimension = 2, limit = 12, cases = 500;
  std::uint64_t seed = kDefaultSeed;
  bool json = false, parallel = false, stats = false;
  std::vector<std::string> check_list;

  auto add_expr_opts = [&](CLI::App* sub) {
    sub->add_option("expr", expr_text, "expression text")->required();
    sub->add_option("--arity,-m", arity, "ambient arity m of X^m (default: inferred)");
    sub->add_option("--dimension,-n", dimension, "dimension of the generic variety")->check(CLI::Range(1, 8));
  };

  auto* expand = app.add_subcommand("expand", "parse and print the canonical form");
  add_expr_opts(expand);
  expand->add_option("--model", model_name, "generic, double-cover, or a cohomology model name/file");

  auto* reduce_cmd = app.add_subcommand("reduce", "normal form under a relation set");
  add_expr_opts(reduce_cmd);
  reduce_cmd->add_option("--model", model_name, "generic, double-cover, or a cohomology model name/file");
  reduce_cmd->add_option("--relations,-r", relations_spec, "relation config file or builtin spec")->required();
  reduce_cmd->add_flag("--stats", stats, "print rule application counts");

  auto* realize_cmd = app.add_subcommand("realize", "cohomology class in H*(X^m)");
  add_expr_opts(realize_cmd);
  realize_cmd->add_option("--model", model_name, "cohomology model name or file")->required();
  realize_cmd->add_option("--limit", limit, "number of tensor terms to print");

  auto* check = app.add_subcommand("check", "run named checks");
  check->add_option("names", check_list, "check names or 'all'")->required();
  check->add_flag("--json", json, "machine-readable report");
  check->add_option("--seed", seed, "seed for randomized checks");
  check->add_option("--cases", cases, "random cases per property family")->check(CLI::PositiveNumber);
  check->add_flag("--parallel", parallel, "run checks concurrently");
  check->add_option("--output,-o", output, "also write the report to this file");

  app.add_subcommand("list-checks", "registered checks");
  app.add_subcommand("list-models", "bundled cohomology models");
  app.add_subcommand("list-relations", "builtin relation tokens");

  auto* export_cmd = app.add_subcommand("export-model", "write a builtin model as JSON");
  std::string export_name;
  export_cmd->add_option("name", export_name, "builtin model name")->required();
  export_cmd->add_option("--output,-o", output, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed()) {
      const Ambient amb = resolve_ambient(model_name, dimension);
      std::cout << to_text(parse_expr(expr_text, amb.variety, arity_opt(arity))) << "\n";
      return 0;
    }
    if (reduce_cmd->parsed()) {
      const Ambient amb = resolve_ambient(model_name, dimension);
      const CycleExpr e = parse_expr(expr_text, amb.variety, arity_opt(arity));
      const RelationSet rs = relations::resolve(relations_spec, *amb.variety);
      ReduceStats st;
      std::cout << to_text(reduce(e, rs, {}, &st)) << "\n";
      if (stats) {
        std::cerr << "applications: " << st.applications << "\ndropped: " << st.dropped << "\n";
      }
      return 0;
    }
    if (realize_cmd->parsed()) {
      const Ambient amb = resolve_ambient(model_name, dimension);
      if (!amb.cohom) throw UnsupportedModelError("'" + model_name + "' has no cohomology model");
      const CycleExpr e = parse_expr(expr_text, amb.variety, arity_opt(arity));
      const TensorClass t = realize(e, *amb.cohom);
      std::cout << (is_zero(t) ? std::string("0") : to_text(t, *amb.cohom, static_cast<std::size_t>(limit))) << "\n";
      return 0;
    }
    if (check->parsed()) {
      CheckConfig cfg;
      cfg.seed = seed;
      cfg.cases = cases;
      const auto reports = run_checks(check_list, cfg, parallel);
      const std::string text = emit_report(reports, json ? ReportFormat::Json : ReportFormat::Human);
      std::cout << text;
      if (!output.empty()) std::ofstream(output) << text;
      return exit_status(reports);
    }
    if (app.got_subcommand("list-checks")) {
      for (const auto& n : check_names()) std::cout << n << "\n";
      return 0;
    }
    if (app.got_subcommand("list-models")) {
      for (const auto& n : models::builtin_names()) {
        auto m = models::builtin(n);
        std::cout << n << "  n=" << m->dimension() << " d=" << m->albanese() << "  " << m->data().description << "\n";
      }
      std::cout << "involution:<n>:<plus>:<minus>  parametrized double cover toy models\n";
      std::cout << "model files: " << models::data_dir().string() << "\n";
      return 0;
    }
    if (app.got_subcommand("list-relations")) {
      for (const auto& line : relations::builtin_help()) std::cout << line << "\n";
      return 0;
    }
    if (export_cmd->parsed()) {
      const std::string text = models::to_json_text(models::builtin_data(export_name));
      if (output.empty())
        std::cout << text;
      else
        std::ofstream(output) << text;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
