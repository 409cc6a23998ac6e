#include "mdiag/proof_replay.hpp"

#include <algorithm>

#include "mdiag/combinatorics.hpp"
#include "mdiag/constructions.hpp"
#include "mdiag/printer.hpp"
#include "mdiag/relations.hpp"

namespace mdiag {

bool ReplayResult::ok() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const ReplayStep& s) { return s.ok; });
}

std::string ReplayResult::failure() const {
  for (const auto& s : steps)
    if (!s.ok) return s.label + ": " + s.witness;
  return {};
}

namespace {

ReplayStep zero_step(std::string label, const CycleExpr& residue) {
  ReplayStep s{std::move(label), residue.is_zero(), {}};
  if (!s.ok) s.witness = to_text(residue);
  return s;
}

ReplayStep equal_step(std::string label, const CycleExpr& got, const CycleExpr& want) {
  ReplayStep s{std::move(label), got == want, {}};
  if (!s.ok) s.witness = "got " + to_text(got) + ", expected " + to_text(want);
  return s;
}

}  // namespace

ModelPtr double_cover_variety() {
  static const ModelPtr model = [] {
    VarietyModel v;
    v.name = "double-cover";
    v.dimension = 2;
    v.symbols = {{"a", SymbolRole::Point}, {"b", SymbolRole::Point}};
    v.cover_degree = 2;
    v.has_involution = true;
    v.involution_invariant = {"b"};
    return make_variety(std::move(v));
  }();
  return model;
}

ReplayResult replay_double_cover(int m) {
  const int N = 2 * m - 1;
  const int arity = N + 1;
  auto model = double_cover_variety();
  const RelationSet cover = relations::cover_double({}, {"b"});
  const RelationSet hyp = relations::hypothesis_ideal(m, "b");
  auto A = [&](int i, int j) {
    return CycleExpr::generator(arity, model, Generator::twisted_pi_diagonal(i, j, "b"));
  };
  auto minus = [&](int i, int j) { return delta_pm(arity, model, i, j, -1); };

  ReplayResult out;
  const CycleExpr lhs = Rational(Integer(1) << N) * gamma_1m(N, "b", model);

  CycleExpr factored = CycleExpr::one(arity, model);
  for (int i = 1; i <= N; ++i) factored = mul(factored, A(0, i) + minus(0, i));
  out.steps.push_back(zero_step("expand", reduce(lhs - factored, cover)));

  // pairing identity on the first three factors, then word by word
  out.steps.push_back(
      zero_step("pair", reduce(mul(minus(0, 1), minus(0, 2)) - mul(A(0, 1), minus(1, 2)), cover)));

  CycleExpr survivor = CycleExpr::one(arity, model);
  for (int i = 1; i <= N; ++i) survivor = mul(survivor, minus(0, i));

  CycleExpr killed(arity, model);
  bool words_ok = true;
  std::string words_witness;
  for (unsigned mask = 1; mask < (1u << N); ++mask) {
    CycleExpr word = CycleExpr::one(arity, model), paired = CycleExpr::one(arity, model);
    std::vector<int> rest;
    for (int i = 1; i <= N; ++i) {
      if (mask >> (i - 1) & 1u) {
        word = mul(word, A(0, i));
        paired = mul(paired, A(0, i));
      } else {
        word = mul(word, minus(0, i));
        rest.push_back(i);
      }
    }
    std::size_t t = 0;
    for (; t + 1 < rest.size(); t += 2) paired = mul(paired, mul(A(0, rest[t]), minus(rest[t], rest[t + 1])));
    if (t < rest.size()) paired = mul(paired, minus(0, rest[t]));
    CycleExpr diff = reduce(word - paired, cover);
    bool in_ideal = quotient_ideal(paired, hyp.drops).is_zero();
    if (words_ok && (!diff.is_zero() || !in_ideal)) {
      words_ok = false;
      words_witness = "R mask " + std::to_string(mask) + (diff.is_zero() ? " not in ideal" : ": " + to_text(diff));
    }
    killed += paired;
  }
  out.steps.push_back({"ideal", words_ok, words_witness});
  out.steps.push_back(zero_step("certificate", reduce(lhs - survivor - killed, cover)));
  out.steps.push_back(zero_step("skew", involution_oddness_pushforward(survivor, cover)));
  out.steps.push_back(
      equal_step("project", pushforward_forget(lhs, 0, cover), Rational(Integer(1) << N) * gamma_m(N, "b", model)));
  return out;
}

ReplayResult sigma_claim(int k, int d) {
  auto model = generic_variety(2);
  const int arity = k + 1;
  std::vector<int> all(arity);
  for (int i = 0; i < arity; ++i) all[i] = i;
  const CycleExpr sigma = CycleExpr::generator(arity, model, Generator::sigma(all));
  const CycleExpr e = Rational(combinatorics::alpha(k)) * small_diagonal(arity, model, all) - sigma;
  const std::vector<DropRule> E = {relations::e_ideal()};

  ReplayResult out;
  if (k < d) {
    out.steps.push_back(zero_step("claim", quotient_ideal(reduce(e, relations::cover_degree(d)), E)));
  } else {
    out.steps.push_back(zero_step("recursion", quotient_ideal(reduce(e, relations::cover_degree(d, false)), E)));
    out.steps.push_back(zero_step("vanishing", reduce(sigma, relations::cover_degree(d))));
  }
  return out;
}

ReplayResult sigma_b_claim(int k, int d) {
  auto model = generic_variety(2);
  const CycleExpr e = Rational(combinatorics::alpha(k)) * gamma_1m(k, "b", model) - sigma_b_expansion(k, d, "b", model);
  const RelationSet rs = relations::cover_degree(d, false) + relations::decorate(d, "b");
  ReplayResult out;
  out.steps.push_back(zero_step("claim", reduce(e, rs)));
  return out;
}

ReplayResult sigma_b_vanishing(int d) {
  auto model = generic_variety(2);
  ReplayResult out;
  out.steps.push_back(zero_step("vanishing", reduce(sigma_b_expansion(d, d, "b", model), relations::cover_degree(d))));
  return out;
}

}  // namespace mdiag
