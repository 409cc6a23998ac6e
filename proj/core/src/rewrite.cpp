#include "mdiag/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mdiag/errors.hpp"

namespace mdiag {

bool DropRule::matches(const Monomial& m) const {
  std::set<std::vector<int>> partners;
  for (const auto& g : m.generators()) {
    if (g.kind != kind) continue;
    if (symbol && g.symbol != *symbol) continue;
    std::vector<int> partner;
    if (anchor) {
      if (g.kind == GenKind::TwistedPiDiagonal) {
        if (g.idx[0] != *anchor) continue;
        partner = {g.idx[1]};
      } else {
        if (!g.touches(*anchor)) continue;
        for (int t : g.idx)
          if (t != *anchor) partner.push_back(t);
      }
    } else {
      partner = g.idx;
    }
    partners.insert(std::move(partner));
    if (static_cast<int>(partners.size()) >= min_count) return true;
  }
  return false;
}

bool RelationSet::has_rule(const std::string& rule_name) const {
  return std::any_of(rules.begin(), rules.end(), [&](const RewriteRule& r) { return r.name == rule_name; });
}

RelationSet& RelationSet::merge(const RelationSet& other) {
  for (const auto& r : other.rules)
    if (!has_rule(r.name)) rules.push_back(r);
  for (const auto& d : other.drops)
    if (std::none_of(drops.begin(), drops.end(), [&](const DropRule& x) { return x.name == d.name; }))
      drops.push_back(d);
  clearing.diagonal_transport = clearing.diagonal_transport || other.clearing.diagonal_transport;
  clearing.involution_transport = clearing.involution_transport || other.clearing.involution_transport;
  clearing.invariant_symbols.insert(other.clearing.invariant_symbols.begin(), other.clearing.invariant_symbols.end());
  if (other.clearing.cover_degree) {
    if (clearing.cover_degree && *clearing.cover_degree != *other.clearing.cover_degree)
      throw ConfigError("relation sets disagree on the cover degree (" + std::to_string(*clearing.cover_degree) +
                        " vs " + std::to_string(*other.clearing.cover_degree) + ")");
    clearing.cover_degree = other.clearing.cover_degree;
  }
  if (name.empty())
    name = other.name;
  else if (!other.name.empty())
    name += "+" + other.name;
  return *this;
}

void RelationSet::filter_rules(const std::function<bool(const std::string&)>& keep) {
  std::erase_if(rules, [&](const RewriteRule& r) { return !keep(r.name); });
}

RelationSet operator+(RelationSet a, const RelationSet& b) { return a.merge(b); }

Measure measure(const Monomial& m, int arity) {
  Measure mu;
  std::map<int, int> occ;
  for (const auto& g : m.generators()) {
    for (int t : g.idx) ++occ[t];
    switch (g.kind) {
      case GenKind::Sigma: {
        std::int64_t w = 4;
        for (int k = 0; k < g.sigma_order(); ++k) w *= 3;
        mu.weight += w;
        for (int t : g.idx) mu.displacement += t - g.idx.front();
        break;
      }
      case GenKind::TwistedPiDiagonal:
        mu.weight += 2;
        mu.displacement += std::abs(g.idx[1] - g.idx[0]);
        break;
      case GenKind::PiDiagonal:
        mu.weight += 1;
        mu.displacement += g.idx[1] - g.idx[0];
        break;
      case GenKind::InvolGraph:
        ++mu.involution;
        mu.displacement += g.idx[1] - g.idx[0];
        break;
      case GenKind::Diagonal:
        mu.displacement += g.idx[1] - g.idx[0];
        break;
      case GenKind::PointCycle:
      case GenKind::Divisor:
        mu.displacement += arity - g.idx[0];
        break;
    }
  }
  for (const auto& [t, c] : occ) mu.repeated += c - 1;
  mu.generators = static_cast<int>(m.size());
  return mu;
}

int repeated_index_count(const Monomial& m) {
  std::map<int, int> occ;
  for (const auto& g : m.generators()) {
    std::set<int> seen(g.idx.begin(), g.idx.end());
    for (int t : seen) ++occ[t];
  }
  return static_cast<int>(std::count_if(occ.begin(), occ.end(), [](const auto& kv) { return kv.second > 1; }));
}

namespace {

bool bind_index(Binding& b, int var, int value) {
  if (b.idx[var] < 0) {
    b.idx[var] = value;
    return true;
  }
  return b.idx[var] == value;
}

bool bind_symbol(Binding& b, const GenPattern& p, const std::string& symbol) {
  if (!p.symbol_literal.empty() && p.symbol_literal != symbol) return false;
  if (!p.symbol_in.empty() && std::find(p.symbol_in.begin(), p.symbol_in.end(), symbol) == p.symbol_in.end())
    return false;
  if (p.symbol_var < 0) return true;
  auto& slot = b.sym[p.symbol_var];
  if (slot.empty()) {
    slot = symbol;
    return true;
  }
  return slot == symbol;
}

bool constraints_hold(const RewriteRule& r, const Binding& b) {
  for (auto [x, y] : r.less)
    if (b.idx[x] >= 0 && b.idx[y] >= 0 && !(b.idx[x] < b.idx[y])) return false;
  return true;
}

// Candidate bindings of pattern p against generator g, in a fixed order.
void unify(const GenPattern& p, const Generator& g, const Binding& in, std::vector<Binding>& out) {
  if (p.kind != g.kind) return;
  if (g.kind == GenKind::Sigma) {
    int k = g.sigma_order();
    if (k < p.min_order || k > p.max_order) return;
    if (!in.tuple.empty()) return;
    Binding b = in;
    b.tuple = g.idx;
    out.push_back(std::move(b));
    return;
  }
  if (g.is_unary()) {
    Binding b = in;
    if (bind_index(b, p.vars[0], g.idx[0]) && bind_symbol(b, p, g.symbol)) out.push_back(std::move(b));
    return;
  }
  auto attempt = [&](int first, int second) {
    Binding b = in;
    if (!bind_index(b, p.vars[0], first) || !bind_index(b, p.vars[1], second)) return;
    if (g.kind == GenKind::TwistedPiDiagonal && !bind_symbol(b, p, g.symbol)) return;
    out.push_back(std::move(b));
  };
  attempt(g.idx[0], g.idx[1]);
  if (g.is_binary_symmetric()) attempt(g.idx[1], g.idx[0]);
}

bool match_from(const RewriteRule& r, const Monomial& m, std::size_t k, std::vector<std::size_t>& pos,
                std::vector<bool>& used, const Binding& b, RuleMatch& found) {
  if (k == r.lhs.size()) {
    found.rule = &r;
    found.binding = b;
    found.positions = pos;
    return true;
  }
  const auto& gens = m.generators();
  std::vector<Binding> cands;
  for (std::size_t p = 0; p < gens.size(); ++p) {
    if (used[p]) continue;
    cands.clear();
    unify(r.lhs[k], gens[p], b, cands);
    for (const auto& c : cands) {
      if (!constraints_hold(r, c)) continue;
      used[p] = true;
      pos.push_back(p);
      if (match_from(r, m, k + 1, pos, used, c, found)) return true;
      pos.pop_back();
      used[p] = false;
    }
  }
  return false;
}

}  // namespace

std::optional<RuleMatch> find_match(const Monomial& m, const RelationSet& rs) {
  std::vector<std::size_t> pos;
  std::vector<bool> used(m.size(), false);
  for (const auto& r : rs.rules) {
    if (r.lhs.size() > m.size()) continue;
    Binding b;
    b.idx.assign(r.index_vars, -1);
    b.sym.assign(r.symbol_vars, {});
    bool ok = true;
    for (auto [var, value] : r.fixed) ok = ok && bind_index(b, var, value);
    if (!ok) continue;
    RuleMatch found;
    pos.clear();
    std::fill(used.begin(), used.end(), false);
    if (match_from(r, m, 0, pos, used, b, found)) {
      std::sort(found.positions.begin(), found.positions.end());
      return found;
    }
  }
  return std::nullopt;
}

CycleExpr reduce(const CycleExpr& e, const RelationSet& rs, const ReduceOptions& opts, ReduceStats* stats) {
  ReduceStats local;
  ReduceStats& st = stats ? *stats : local;
  auto dropped = [&](const Monomial& m) {
    return std::any_of(rs.drops.begin(), rs.drops.end(), [&](const DropRule& d) { return d.matches(m); });
  };

  CycleExpr result(e.arity(), e.model());
  std::map<Monomial, Rational> current(e.terms().begin(), e.terms().end());
  while (!current.empty()) {
    std::map<Monomial, Rational> next;
    for (const auto& [m, c] : current) {
      if (c == 0) continue;
      if (dropped(m)) {
        ++st.dropped;
        continue;
      }
      auto match = find_match(m, rs);
      if (!match) {
        result.add_term(m, c);
        continue;
      }
      if (++st.applications > opts.max_applications)
        throw NonTerminationError("reduce under '" + rs.name + "' exceeded " + std::to_string(opts.max_applications) +
                                  " rule applications");
      Monomial rest = m.without(match->positions);
      const Measure before = opts.check_measure ? measure(m, e.arity()) : Measure{};
      for (auto& [gens, coef] : match->rule->rhs(match->binding)) {
        if (coef == 0) continue;
        Monomial nm = rest * Monomial(std::move(gens));
        if (opts.check_measure && !(measure(nm, e.arity()) < before))
          throw NonTerminationError("rule " + match->rule->name + " does not decrease the measure");
        next[std::move(nm)] += c * coef;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    current = std::move(next);
  }
  return result;
}

bool is_zero_mod(const CycleExpr& e, const RelationSet& rs, const ReduceOptions& opts) {
  return reduce(e, rs, opts).is_zero();
}

CycleExpr quotient_ideal(const CycleExpr& e, const std::vector<DropRule>& drops) {
  CycleExpr out(e.arity(), e.model());
  for (const auto& [m, c] : e.terms())
    if (std::none_of(drops.begin(), drops.end(), [&](const DropRule& d) { return d.matches(m); })) out.add_term(m, c);
  return out;
}

CycleExpr pushforward_forget(const CycleExpr& e, int i, const RelationSet& rs) {
  return pushforward_forget(e, i, rs.clearing);
}

}  // namespace mdiag
